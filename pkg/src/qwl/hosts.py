"""Host graphs on 3^n vertices: one cylinder and three trees, each with its cut family.

Labelings follow the column/preorder schemes the wirelength formulas assume:

* cylinder      -- 3 rows x 3^(n-1) columns; column c holds labels 3c, 3c+1, 3c+2
                   top to bottom, every column is a triangle, rows are paths.
* caterpillar2  -- spine of 3^(n-1) vertices, two leaves each; spine vertex i is
                   label 3i, its leaves are 3i+1 and 3i+2.
* firecracker3  -- 3^(n-1) three-vertex stars chained through one designated
                   link leaf per star: unit i is (link 3i, center 3i+1, leaf 3i+2).
* banana2       -- two stars on floor(3^n / 2) vertices, their link leaves tied
                   to an extra root vertex.

Each builder also declares the cut family the congestion engine consumes:
every host edge is covered exactly once (trees) or twice (cylinder).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .graph import CutFamily, EdgeCut, LabeledGraph

KIND_CYLINDER = "cylinder"
KIND_CATERPILLAR = "caterpillar2"
KIND_FIRECRACKER = "firecracker3"
KIND_BANANA = "banana2"

HOST_KINDS = (KIND_CYLINDER, KIND_CATERPILLAR, KIND_FIRECRACKER, KIND_BANANA)

# Short CLI spellings.
_ALIASES = {
    "cylinder": KIND_CYLINDER,
    "caterpillar": KIND_CATERPILLAR,
    "caterpillar2": KIND_CATERPILLAR,
    "firecracker": KIND_FIRECRACKER,
    "firecracker3": KIND_FIRECRACKER,
    "banana": KIND_BANANA,
    "banana2": KIND_BANANA,
}


@dataclass(frozen=True)
class HostSpec:
    """A built host: its kind, dimension, graph, and declared cut family."""

    kind: str
    n: int
    graph: LabeledGraph
    cut_family: CutFamily

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count


def _require_dimension(n: int) -> None:
    if n < 2:
        raise DomainError(f"hosts are defined for n >= 2, got {n}")


def build_cylinder(n: int) -> HostSpec:
    """Triangle-times-path host with the doubled column cuts and three row cuts."""
    _require_dimension(n)
    columns = 3 ** (n - 1)
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    for c in range(columns):
        base = 3 * c
        edges.extend([(base, base + 1), (base, base + 2), (base + 1, base + 2)])
        for j in range(3):
            roles[base + j] = f"row:{j},col:{c}"
        if c + 1 < columns:
            edges.extend((base + j, base + 3 + j) for j in range(3))
    graph = LabeledGraph(3**n, edges, roles)

    cuts: list[EdgeCut] = []
    for i in range(1, columns):
        gap_edges = tuple((3 * (i - 1) + j, 3 * i + j) for j in range(3))
        side = frozenset(range(3 * i))
        # Listed twice: the family covers every edge exactly twice.
        cuts.append(EdgeCut(f"vcut{i}a", gap_edges, side))
        cuts.append(EdgeCut(f"vcut{i}b", gap_edges, side))
    for j in range(3):
        others = [r for r in range(3) if r != j]
        row_edges = tuple(
            (min(3 * c + j, 3 * c + r), max(3 * c + j, 3 * c + r))
            for c in range(columns)
            for r in others
        )
        side = frozenset(3 * c + j for c in range(columns))
        cuts.append(EdgeCut(f"hcut{j}", row_edges, side))
    return HostSpec(KIND_CYLINDER, n, graph, CutFamily(2, tuple(cuts)))


def build_caterpillar(n: int) -> HostSpec:
    """Spine path with two leaves per spine vertex."""
    _require_dimension(n)
    spine = 3 ** (n - 1)
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    for i in range(spine):
        s = 3 * i
        roles[s] = "spine"
        roles[s + 1] = "leaf"
        roles[s + 2] = "leaf"
        edges.append((s, s + 1))
        edges.append((s, s + 2))
        if i + 1 < spine:
            edges.append((s, s + 3))
    graph = LabeledGraph(3**n, edges, roles)

    cuts: list[EdgeCut] = []
    for i in range(1, spine):
        cuts.append(
            EdgeCut(f"spine{i}", ((3 * (i - 1), 3 * i),), frozenset(range(3 * i)))
        )
    for i in range(spine):
        for leaf in (3 * i + 1, 3 * i + 2):
            cuts.append(EdgeCut(f"leaf{leaf}", ((3 * i, leaf),), frozenset({leaf})))
    return HostSpec(KIND_CATERPILLAR, n, graph, CutFamily(1, tuple(cuts)))


def build_firecracker(n: int) -> HostSpec:
    """Chain of three-vertex stars linked through one leaf per star."""
    _require_dimension(n)
    units = 3 ** (n - 1)
    edges: list[tuple[int, int]] = []
    roles: dict[int, str] = {}
    for i in range(units):
        link, center, leaf = 3 * i, 3 * i + 1, 3 * i + 2
        roles[link] = "link-leaf"
        roles[center] = "center"
        roles[leaf] = "leaf"
        edges.append((link, center))
        edges.append((center, leaf))
        if i + 1 < units:
            edges.append((link, link + 3))
    graph = LabeledGraph(3**n, edges, roles)

    cuts: list[EdgeCut] = []
    for i in range(1, units):
        cuts.append(
            EdgeCut(f"link{i}", ((3 * (i - 1), 3 * i),), frozenset(range(3 * i)))
        )
    for i in range(units):
        link, center, leaf = 3 * i, 3 * i + 1, 3 * i + 2
        cuts.append(EdgeCut(f"star{i}", ((link, center),), frozenset({center, leaf})))
        cuts.append(EdgeCut(f"leaf{i}", ((center, leaf),), frozenset({leaf})))
    return HostSpec(KIND_FIRECRACKER, n, graph, CutFamily(1, tuple(cuts)))


def build_banana(n: int) -> HostSpec:
    """Two large stars joined to a root through their link leaves.

    With m = floor(3^n / 2): star one is center 0, free leaves 1..m-2, link
    leaf m-1; the root is m; star two mirrors it with link leaf m+1, center
    m+2, free leaves m+3..3^n-1.
    """
    _require_dimension(n)
    size = 3**n
    m = size // 2
    center1, link1, root, link2, center2 = 0, m - 1, m, m + 1, m + 2
    edges: list[tuple[int, int]] = [(center1, x) for x in range(1, m)]
    edges.append((link1, root))
    edges.append((root, link2))
    edges.append((link2, center2))
    edges.extend((center2, x) for x in range(m + 3, size))
    roles = {center1: "center", link1: "link-leaf", root: "root", link2: "link-leaf", center2: "center"}
    for x in range(1, m - 1):
        roles[x] = "leaf"
    for x in range(m + 3, size):
        roles[x] = "leaf"
    graph = LabeledGraph(size, edges, roles)

    cuts: list[EdgeCut] = []
    for x in range(1, m - 1):
        cuts.append(EdgeCut(f"leaf1-{x}", ((center1, x),), frozenset({x})))
    for x in range(m + 3, size):
        cuts.append(EdgeCut(f"leaf2-{x}", ((center2, x),), frozenset({x})))
    cuts.append(EdgeCut("star1", ((center1, link1),), frozenset(range(m - 1))))
    cuts.append(EdgeCut("star2", ((link2, center2),), frozenset(range(m + 2, size))))
    cuts.append(EdgeCut("root1", ((link1, root),), frozenset(range(m))))
    cuts.append(EdgeCut("root2", ((root, link2),), frozenset(range(m + 1, size))))
    return HostSpec(KIND_BANANA, n, graph, CutFamily(1, tuple(cuts)))


_BUILDERS: dict[str, Callable[[int], HostSpec]] = {
    KIND_CYLINDER: build_cylinder,
    KIND_CATERPILLAR: build_caterpillar,
    KIND_FIRECRACKER: build_firecracker,
    KIND_BANANA: build_banana,
}


def normalize_kind(kind: str) -> str:
    try:
        return _ALIASES[kind]
    except KeyError:
        raise DomainError(f"unknown host kind {kind!r}; choose from {sorted(set(_ALIASES))}") from None


def build_host(kind: str, n: int) -> HostSpec:
    return _BUILDERS[normalize_kind(kind)](n)


def preorder_labels(
    tree: LabeledGraph, root: int, child_key: Callable[[int], object] | None = None
) -> tuple[int, ...]:
    """Depth-first preorder visit sequence of a tree.

    Children are visited in ascending label order unless ``child_key`` supplies
    a different sort key.  Relabeling each vertex with its position in the
    returned sequence yields the canonical labeling the tree builders use.
    Cyclic or disconnected input is rejected.
    """
    if not (0 <= root < tree.vertex_count):
        raise DomainError(f"root {root} outside 0..{tree.vertex_count - 1}")
    if len(tree.edges) != tree.vertex_count - 1:
        raise DomainError(
            f"not a tree: {tree.vertex_count} vertices need {tree.vertex_count - 1} edges, "
            f"got {len(tree.edges)}"
        )
    key = child_key if child_key is not None else (lambda label: label)
    order: list[int] = []
    seen = [False] * tree.vertex_count
    stack = [root]
    seen[root] = True
    while stack:
        x = stack.pop()
        order.append(x)
        children = [y for y in tree.neighbors(x) if not seen[y]]
        for y in children:
            seen[y] = True
        for y in sorted(children, key=key, reverse=True):
            stack.append(y)
    if len(order) != tree.vertex_count:
        # Right edge count but unreached vertices means a cycle somewhere.
        raise DomainError("not a tree: input contains a cycle or is disconnected")
    return tuple(order)
