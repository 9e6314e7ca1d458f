"""Embeddings of the ternary cube into hosts, with two independent wirelength engines.

An embedding is a bijection from guest labels to host labels plus a routing
rule.  ``wirelength_by_distance`` sums shortest-path lengths and never looks
at routes; ``wirelength_by_cuts`` aggregates per-cut congestion values after
verifying the declared cut family, so the two engines can check each other.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DomainError, VerificationError
from .graph import (
    CutFamily,
    LabeledGraph,
    bfs_distance,
    connected_components,
    cut_family_covers,
)
from .hosts import KIND_CYLINDER, HostSpec
from .qcube import QCube, iso_closed_form

ROUTING_TREE = "tree-unique"
ROUTING_CYLINDER = "dimension-ordered-cylinder"

Host = Union[HostSpec, LabeledGraph]
Edge = tuple[int, int]


def host_graph(host: Host) -> LabeledGraph:
    return host.graph if isinstance(host, HostSpec) else host


def _is_tree(graph: LabeledGraph) -> bool:
    if len(graph.edges) != graph.vertex_count - 1:
        return False
    return len(connected_components(graph)) == 1


@dataclass(frozen=True)
class EmbeddingInstance:
    """Guest, host, label bijection (``mapping[guest] = host``), and routing rule."""

    guest: QCube
    host: Host
    mapping: tuple[int, ...]
    routing: str

    def __post_init__(self) -> None:
        graph = host_graph(self.host)
        size = self.guest.vertex_count
        if graph.vertex_count != size:
            raise DomainError(
                f"guest has {size} vertices but host has {graph.vertex_count}"
            )
        mapping = tuple(self.mapping)
        object.__setattr__(self, "mapping", mapping)
        if sorted(mapping) != list(range(size)):
            raise DomainError("mapping is not a bijection onto host labels")
        if self.routing == ROUTING_TREE:
            if not _is_tree(graph):
                raise DomainError("tree-unique routing requires an acyclic connected host")
        elif self.routing == ROUTING_CYLINDER:
            if not (isinstance(self.host, HostSpec) and self.host.kind == KIND_CYLINDER):
                raise DomainError("dimension-ordered routing requires a cylinder host")
        else:
            raise DomainError(f"unknown routing rule {self.routing!r}")

    @property
    def host_graph(self) -> LabeledGraph:
        return host_graph(self.host)

    def inverse(self) -> list[int]:
        inv = [0] * len(self.mapping)
        for g, h in enumerate(self.mapping):
            inv[h] = g
        return inv


def lex_embedding(guest: QCube, host: Host) -> EmbeddingInstance:
    """The identity-label embedding with the routing rule the host calls for."""
    graph = host_graph(host)
    if isinstance(host, HostSpec) and host.kind == KIND_CYLINDER:
        routing = ROUTING_CYLINDER
    elif _is_tree(graph):
        routing = ROUTING_TREE
    else:
        raise DomainError("no routing rule available for a cyclic bare-graph host")
    return EmbeddingInstance(guest, host, tuple(range(graph.vertex_count)), routing)


# -- routing -----------------------------------------------------------


def _tree_parents(graph: LabeledGraph) -> tuple[list[int], list[int]]:
    parent = [-1] * graph.vertex_count
    depth = [0] * graph.vertex_count
    seen = [False] * graph.vertex_count
    seen[0] = True
    stack = [0]
    while stack:
        x = stack.pop()
        for y in graph.neighbors(x):
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                depth[y] = depth[x] + 1
                stack.append(y)
    return parent, depth


def _tree_walk(parent: list[int], depth: list[int], a: int, b: int) -> tuple[Edge, ...]:
    # Climb both endpoints to their lowest common ancestor.
    up_a: list[Edge] = []
    up_b: list[Edge] = []
    while depth[a] > depth[b]:
        up_a.append((a, parent[a]))
        a = parent[a]
    while depth[b] > depth[a]:
        up_b.append((b, parent[b]))
        b = parent[b]
    while a != b:
        up_a.append((a, parent[a]))
        a = parent[a]
        up_b.append((b, parent[b]))
        b = parent[b]
    return tuple(up_a + [(v, u) for u, v in reversed(up_b)])


def _cylinder_walk(a: int, b: int) -> tuple[Edge, ...]:
    # Column step first (any two rows of a column are adjacent), then row walk.
    col_a, row_a = divmod(a, 3)
    col_b, row_b = divmod(b, 3)
    walk: list[Edge] = []
    here = a
    if row_a != row_b:
        step = 3 * col_a + row_b
        walk.append((here, step))
        here = step
    direction = 3 if col_b > col_a else -3
    while here != b:
        walk.append((here, here + direction))
        here += direction
    return tuple(walk)


class _Router:
    """Maps guest edges to host walks under one embedding; built once, queried many times."""

    def __init__(self, emb: EmbeddingInstance) -> None:
        self._emb = emb
        if emb.routing == ROUTING_TREE:
            self._parent, self._depth = _tree_parents(emb.host_graph)
        else:
            self._parent = self._depth = None

    def walk(self, guest_edge: Edge) -> tuple[Edge, ...]:
        u, v = guest_edge
        a, b = self._emb.mapping[u], self._emb.mapping[v]
        if self._emb.routing == ROUTING_TREE:
            return _tree_walk(self._parent, self._depth, a, b)
        return _cylinder_walk(a, b)


def _check_guest_edge(emb: EmbeddingInstance, guest_edge: Iterable[int]) -> Edge:
    u, v = guest_edge
    edge = (u, v) if u < v else (v, u)
    if edge not in emb.guest.graph.edge_set:
        raise DomainError(f"({u}, {v}) is not an edge of the guest cube")
    return (u, v)


def route(emb: EmbeddingInstance, guest_edge: Iterable[int]) -> tuple[Edge, ...]:
    """Host walk realizing one guest edge, as a sequence of directed edge pairs."""
    u, v = _check_guest_edge(emb, guest_edge)
    return _Router(emb).walk((u, v))


def _all_routes(emb: EmbeddingInstance) -> dict[Edge, frozenset[Edge]]:
    """Normalized edge sets of every guest edge's route, computed in one pass."""
    router = _Router(emb)
    routes: dict[Edge, frozenset[Edge]] = {}
    for edge in emb.guest.graph.edges:
        walk = router.walk(edge)
        routes[edge] = frozenset((a, b) if a < b else (b, a) for a, b in walk)
    return routes


# -- engine 1: distance sums --------------------------------------------


def wirelength_by_distance(emb: EmbeddingInstance) -> int:
    """Sum of host shortest-path distances over all guest edges (routing-free)."""
    graph = emb.host_graph
    mapping = emb.mapping
    return sum(bfs_distance(graph, mapping[u], mapping[v]) for u, v in emb.guest.graph.edges)


# -- congestion --------------------------------------------------------


@dataclass(frozen=True)
class CongestionReport:
    """How many routed guest edges load each host edge, plus per-cut totals."""

    per_edge: dict[Edge, int]
    per_cut: dict[str, int] | None
    wirelength: int

    def to_csv(self) -> str:
        lines = ["host_edge_u,host_edge_v,congestion"]
        for (u, v), count in sorted(self.per_edge.items()):
            lines.append(f"{u},{v},{count}")
        return "\n".join(lines) + "\n"


def congestion_per_edge(emb: EmbeddingInstance) -> CongestionReport:
    """Route every guest edge and count the load on each host edge."""
    counts: Counter[Edge] = Counter()
    total = 0
    for edge_set in _all_routes(emb).values():
        counts.update(edge_set)
        total += len(edge_set)
    per_edge = {edge: counts.get(edge, 0) for edge in emb.host_graph.edges}
    per_cut = None
    if isinstance(emb.host, HostSpec):
        per_cut = {
            cut.name: sum(per_edge[e] for e in cut.edges)
            for cut in emb.host.cut_family.cuts
        }
    return CongestionReport(per_edge, per_cut, total)


def cut_congestion(guest: QCube, guest_side: Iterable[int]) -> int:
    """Crossing-edge count of a vertex set: degree sum minus twice the induced edges.

    ``guest_side`` is the preimage of a cut's small side; for the identity
    embedding that is the small side itself.
    """
    side = set(guest_side)
    degree_sum = sum(guest.graph.degree(v) for v in side)
    induced = sum(1 for u, v in guest.graph.edges if u in side and v in side)
    return degree_sum - 2 * induced


# -- cut-family verification --------------------------------------------


@dataclass(frozen=True)
class CutCheck:
    """Verification outcome for one cut.

    ``splits_in_two``: removal leaves exactly two components, one of which is
    the declared small side.  ``intra_avoid`` / ``crossing_once``: routes of
    non-crossing guest edges avoid the cut, crossing ones meet it exactly once.
    ``side_is_maximum``: the preimage induces as many guest edges as any set
    of its size can.
    """

    name: str
    side_size: int
    congestion: int
    splits_in_two: bool
    intra_avoid: bool
    crossing_once: bool
    side_is_maximum: bool

    @property
    def ok(self) -> bool:
        return (
            self.splits_in_two
            and self.intra_avoid
            and self.crossing_once
            and self.side_is_maximum
        )


@dataclass(frozen=True)
class CutFamilyVerification:
    checks: tuple[CutCheck, ...]
    partition_ok: bool

    @property
    def ok(self) -> bool:
        return self.partition_ok and all(check.ok for check in self.checks)

    @property
    def per_cut(self) -> dict[str, int]:
        return {check.name: check.congestion for check in self.checks}

    def failures(self) -> list[str]:
        notes = []
        if not self.partition_ok:
            notes.append("cut family does not cover every host edge the declared number of times")
        for check in self.checks:
            if check.ok:
                continue
            broken = [
                label
                for flag, label in (
                    (check.splits_in_two, "two-components"),
                    (check.intra_avoid, "intra-routes-avoid-cut"),
                    (check.crossing_once, "crossing-routes-hit-once"),
                    (check.side_is_maximum, "small-side-maximum"),
                )
                if not flag
            ]
            notes.append(f"cut {check.name}: failed {', '.join(broken)}")
        return notes


def verify_cut_family(emb: EmbeddingInstance, family: CutFamily | None = None) -> CutFamilyVerification:
    """Check every cut against the four congestion-engine preconditions.

    Failures become report entries, never exceptions, so deliberately broken
    families can be inspected.
    """
    family = _resolve_family(emb, family)
    graph = emb.host_graph
    guest_edges = emb.guest.graph.edges
    inverse = emb.inverse()
    routes = _all_routes(emb)

    checks: list[CutCheck] = []
    for cut in family.cuts:
        components = connected_components(graph, cut.edges)
        splits = len(components) == 2 and any(comp == cut.small_side for comp in components)

        preimage = {inverse[h] for h in cut.small_side}
        cut_set = cut.edge_set
        intra_ok = True
        crossing_ok = True
        for guest_edge in guest_edges:
            u, v = guest_edge
            hits = len(routes[guest_edge] & cut_set)
            if (u in preimage) != (v in preimage):
                if hits != 1:
                    crossing_ok = False
            elif hits:
                intra_ok = False

        induced = sum(1 for u, v in guest_edges if u in preimage and v in preimage)
        maximum = induced == iso_closed_form(len(preimage), emb.guest.n)
        checks.append(
            CutCheck(
                name=cut.name,
                side_size=len(cut.small_side),
                congestion=cut_congestion(emb.guest, preimage),
                splits_in_two=splits,
                intra_avoid=intra_ok,
                crossing_once=crossing_ok,
                side_is_maximum=maximum,
            )
        )
    return CutFamilyVerification(tuple(checks), cut_family_covers(graph, family))


def _resolve_family(emb: EmbeddingInstance, family: CutFamily | None) -> CutFamily:
    if family is not None:
        return family
    if isinstance(emb.host, HostSpec):
        return emb.host.cut_family
    raise DomainError("no cut family given and the host does not declare one")


def wirelength_by_cuts(emb: EmbeddingInstance, family: CutFamily | None = None) -> int:
    """Aggregate verified per-cut congestion values into the exact wirelength.

    Refuses families that fail verification; the congestion total must divide
    evenly by the family's multiplicity.
    """
    family = _resolve_family(emb, family)
    verification = verify_cut_family(emb, family)
    if not verification.ok:
        raise VerificationError(
            "cut family failed verification: " + "; ".join(verification.failures())
        )
    total = sum(check.congestion for check in verification.checks)
    value, remainder = divmod(total, family.multiplicity)
    if remainder:
        raise VerificationError(
            f"congestion total {total} is not divisible by multiplicity {family.multiplicity}"
        )
    return value
