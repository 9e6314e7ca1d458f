"""Immutable undirected graphs on integer labels, plus edge-cut containers.

Everything downstream (guest cubes, host graphs, the three wirelength engines)
is built on `LabeledGraph`.  Edges are stored endpoint-sorted and deduplicated,
so two graphs constructed from the same logical edge set compare equal and
serialize byte-identically.
"""

from __future__ import annotations

import json
from collections import Counter, deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, GraphConstructionError, UnreachableVertexError

# Largest vertex count for which shortest-path rows are memoized on the graph.
ALL_PAIRS_CACHE_LIMIT = 1024

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class LabeledGraph:
    """Undirected graph on labels ``0 .. vertex_count-1``, immutable after construction.

    ``roles`` is an optional map from vertex label to a free-form tag
    (``"spine"``, ``"center"``, ``"row:1,col:2"``, ...) used by host builders
    and preserved by JSON export.
    """

    __slots__ = ("vertex_count", "edges", "roles", "_adj", "_edge_set", "_dist_rows")

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[Sequence[int]] = (),
        roles: Mapping[int, str] | None = None,
    ) -> None:
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise GraphConstructionError(
                f"vertex_count must be a positive integer, got {vertex_count!r}"
            )
        normalized: set[Edge] = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise GraphConstructionError(f"self-loop ({u}, {v}) is not allowed")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphConstructionError(
                    f"edge ({u}, {v}) references a label outside 0..{vertex_count - 1}"
                )
            normalized.add(_normalize_edge(u, v))
        role_map: dict[int, str] = {}
        if roles:
            for label, tag in roles.items():
                if not (0 <= label < vertex_count):
                    raise GraphConstructionError(
                        f"role tag for label {label} outside 0..{vertex_count - 1}"
                    )
                role_map[label] = str(tag)
        self.vertex_count = vertex_count
        self.edges: tuple[Edge, ...] = tuple(sorted(normalized))
        self.roles = role_map
        self._adj: tuple[tuple[int, ...], ...] | None = None
        self._edge_set: frozenset[Edge] | None = None
        self._dist_rows: list[list[int] | None] | None = None

    # -- basic queries -------------------------------------------------

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            lists: list[list[int]] = [[] for _ in range(self.vertex_count)]
            for u, v in self.edges:
                lists[u].append(v)
                lists[v].append(u)
            self._adj = tuple(tuple(sorted(nbrs)) for nbrs in lists)
        return self._adj

    @property
    def edge_set(self) -> frozenset[Edge]:
        if self._edge_set is None:
            self._edge_set = frozenset(self.edges)
        return self._edge_set

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edge_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return (
            self.vertex_count == other.vertex_count
            and self.edges == other.edges
            and self.roles == other.roles
        )

    __hash__ = None  # mutable caches; identity hashing would be misleading

    def __repr__(self) -> str:
        return f"LabeledGraph(vertex_count={self.vertex_count}, edges={len(self.edges)})"

    # -- distances -----------------------------------------------------

    def _distance_row(self, source: int) -> list[int]:
        if self.vertex_count > ALL_PAIRS_CACHE_LIMIT:
            return _bfs_levels(self, source)
        if self._dist_rows is None:
            self._dist_rows = [None] * self.vertex_count
        row = self._dist_rows[source]
        if row is None:
            row = _bfs_levels(self, source)
            self._dist_rows[source] = row
        return row


def build_graph(
    vertex_count: int,
    edges: Iterable[Sequence[int]] = (),
    roles: Mapping[int, str] | None = None,
) -> LabeledGraph:
    """Construct a graph, rejecting self-loops and out-of-range labels by name."""
    return LabeledGraph(vertex_count, edges, roles)


def _bfs_levels(graph: LabeledGraph, source: int) -> list[int]:
    # -1 marks "not reached yet"; public APIs never leak it.
    dist = [-1] * graph.vertex_count
    dist[source] = 0
    queue = deque([source])
    adj = graph.adjacency
    while queue:
        x = queue.popleft()
        dx = dist[x] + 1
        for y in adj[x]:
            if dist[y] < 0:
                dist[y] = dx
                queue.append(y)
    return dist


def _check_label(graph: LabeledGraph, label: int) -> None:
    if not (0 <= label < graph.vertex_count):
        raise DomainError(f"label {label} outside 0..{graph.vertex_count - 1}")


def bfs_distance(graph: LabeledGraph, u: int, v: int) -> int:
    """Shortest-path edge count between ``u`` and ``v``.

    Raises ``UnreachableVertexError`` for disconnected pairs; there is no
    sentinel value.
    """
    _check_label(graph, u)
    _check_label(graph, v)
    if u == v:
        return 0
    d = graph._distance_row(u)[v]
    if d < 0:
        raise UnreachableVertexError(f"vertex {v} is unreachable from vertex {u}")
    return d


def distance_matrix(graph: LabeledGraph) -> list[list[int]]:
    """Dense all-pairs distance table for a connected graph."""
    if graph.vertex_count > ALL_PAIRS_CACHE_LIMIT:
        raise DomainError(
            f"{graph.vertex_count} vertices exceed the dense-matrix limit of {ALL_PAIRS_CACHE_LIMIT}"
        )
    rows = []
    for source in range(graph.vertex_count):
        row = graph._distance_row(source)
        if min(row) < 0:
            raise UnreachableVertexError("graph is disconnected; no distance matrix exists")
        rows.append(row)
    return rows


def cartesian_product(g: LabeledGraph, h: LabeledGraph) -> LabeledGraph:
    """Cartesian product with vertex ``(a, b)`` labeled ``a * h.vertex_count + b``."""
    hn = h.vertex_count
    edges: list[Edge] = []
    for a in range(g.vertex_count):
        base = a * hn
        for b1, b2 in h.edges:
            edges.append((base + b1, base + b2))
    for a1, a2 in g.edges:
        for b in range(hn):
            edges.append((a1 * hn + b, a2 * hn + b))
    return LabeledGraph(g.vertex_count * hn, edges)


def connected_components(
    graph: LabeledGraph, removed_edges: Iterable[Sequence[int]] = ()
) -> list[frozenset[int]]:
    """Components of the graph after deleting ``removed_edges``, ordered by smallest label."""
    blocked = {_normalize_edge(u, v) for u, v in removed_edges}
    seen = [False] * graph.vertex_count
    components: list[frozenset[int]] = []
    adj = graph.adjacency
    for start in range(graph.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        member = [start]
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y] and _normalize_edge(x, y) not in blocked:
                    seen[y] = True
                    member.append(y)
                    queue.append(y)
        components.append(frozenset(member))
    return components


# -- serialization -----------------------------------------------------


def graph_to_json(graph: LabeledGraph) -> str:
    """Deterministic JSON edge list; re-importing and re-exporting is byte-identical."""
    payload = {
        "vertex_count": graph.vertex_count,
        "edges": [[u, v] for u, v in graph.edges],
        "roles": {str(label): graph.roles[label] for label in sorted(graph.roles)},
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def graph_from_json(text: str) -> LabeledGraph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphConstructionError(f"invalid json-edgelist: {exc}") from exc
    if not isinstance(data, dict):
        raise GraphConstructionError("invalid json-edgelist: top level must be an object")
    try:
        vertex_count = data["vertex_count"]
        raw_edges = data["edges"]
    except KeyError as exc:
        raise GraphConstructionError(f"invalid json-edgelist: missing key {exc}") from exc
    if not isinstance(raw_edges, list):
        raise GraphConstructionError("invalid json-edgelist: edges must be a list")
    edges = []
    for item in raw_edges:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise GraphConstructionError(f"invalid json-edgelist: bad edge entry {item!r}")
        edges.append((item[0], item[1]))
    roles_raw = data.get("roles") or {}
    if not isinstance(roles_raw, dict):
        raise GraphConstructionError("invalid json-edgelist: roles must be an object")
    try:
        roles = {int(k): str(v) for k, v in roles_raw.items()}
    except ValueError as exc:
        raise GraphConstructionError(f"invalid json-edgelist: bad role key: {exc}") from exc
    return LabeledGraph(vertex_count, edges, roles)


def graph_to_dot(graph: LabeledGraph) -> str:
    lines = ["graph G {"]
    isolated = [v for v in range(graph.vertex_count) if graph.degree(v) == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)


def export_graph(graph: LabeledGraph, fmt: str) -> str:
    if fmt in ("json", "json-edgelist"):
        return graph_to_json(graph)
    if fmt == "dot":
        return graph_to_dot(graph)
    raise DomainError(f"unknown export format {fmt!r}")


# -- edge cuts ---------------------------------------------------------


@dataclass(frozen=True)
class EdgeCut:
    """A named set of host edges whose removal is meant to split the host in two.

    The two-component property is *declared*, not enforced here; the embedding
    module verifies it and reports failures instead of raising.
    """

    name: str
    edges: tuple[Edge, ...]
    small_side: frozenset[int]

    def __post_init__(self) -> None:
        if not self.edges:
            raise GraphConstructionError(f"cut {self.name!r} has no edges")
        normalized = tuple(sorted(_normalize_edge(u, v) for u, v in self.edges))
        object.__setattr__(self, "edges", normalized)
        object.__setattr__(self, "small_side", frozenset(self.small_side))

    @property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)


@dataclass(frozen=True)
class CutFamily:
    """An ordered collection of cuts that together cover every host edge ``multiplicity`` times."""

    multiplicity: int
    cuts: tuple[EdgeCut, ...]

    def __post_init__(self) -> None:
        if self.multiplicity < 1:
            raise GraphConstructionError("cut family multiplicity must be >= 1")
        object.__setattr__(self, "cuts", tuple(self.cuts))

    def __iter__(self):
        return iter(self.cuts)

    def __len__(self) -> int:
        return len(self.cuts)


def cut_family_covers(graph: LabeledGraph, family: CutFamily) -> bool:
    """True iff the multiset union of the cuts equals ``multiplicity`` copies of the edge set."""
    counts = Counter()
    for cut in family.cuts:
        counts.update(cut.edges)
    return counts == Counter({edge: family.multiplicity for edge in graph.edges})


def cut_family_to_json(family: CutFamily) -> str:
    payload = {
        "multiplicity": family.multiplicity,
        "cuts": [
            {
                "name": cut.name,
                "edges": [[u, v] for u, v in cut.edges],
                "small_side": sorted(cut.small_side),
            }
            for cut in family.cuts
        ],
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
