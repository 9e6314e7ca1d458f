"""Minimality probes: exhaustive search over all bijections, and seeded local search.

The exhaustive search is exact up to 9 host vertices; the local search is a
random-restart two-swap descent (optionally simulated annealing) meant to
falsify minimum-wirelength claims rather than prove them.  Both re-evaluate
their best map before reporting, so a result can be trusted independently of
the search bookkeeping.
"""

from __future__ import annotations

import json
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .embedding import Host, host_graph
from .errors import BudgetError, DomainError
from .graph import distance_matrix
from .qcube import QCube

# Exhaustive enumeration of N! bijections is refused above this many vertices.
DEFAULT_EXHAUSTIVE_BUDGET = 9
# Default cap on candidate evaluations per local-search restart.
DEFAULT_STEP_BUDGET = 200_000

METHOD_EXHAUSTIVE = "exhaustive"
METHOD_DESCENT = "swap-descent"
METHOD_ANNEAL = "anneal"


@dataclass(frozen=True)
class SearchResult:
    best_wirelength: int
    best_map: tuple[int, ...]
    evaluated: int
    method: str
    seed: int | None

    def to_json(self) -> str:
        payload = {
            "best_wirelength": self.best_wirelength,
            "best_map": list(self.best_map),
            "evaluated": self.evaluated,
            "method": self.method,
            "seed": self.seed,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _wirelength(dist: Sequence[Sequence[int]], edges: Sequence[tuple[int, int]], mapping: Sequence[int]) -> int:
    return sum(dist[mapping[u]][mapping[v]] for u, v in edges)


def _search_block(
    dist: tuple[tuple[int, ...], ...],
    edges: tuple[tuple[int, int], ...],
    size: int,
    first: int,
) -> tuple[int, tuple[int, ...]]:
    """Best map among all bijections sending guest label 0 to host label ``first``."""
    rest = [x for x in range(size) if x != first]
    best_wl = None
    best_map: tuple[int, ...] | None = None
    for tail in permutations(rest):
        mapping = (first,) + tail
        wl = 0
        for u, v in edges:
            wl += dist[mapping[u]][mapping[v]]
            if best_wl is not None and wl >= best_wl:
                break
        else:
            if best_wl is None or wl < best_wl:
                best_wl = wl
                best_map = mapping
    assert best_wl is not None and best_map is not None
    return best_wl, best_map


def exhaustive_search(
    guest: QCube, host: Host, budget: int | None = None, workers: int = 1
) -> SearchResult:
    """Exact minimum over every bijection; ties go to the lexicographically smallest map.

    The permutation space is partitioned by the image of guest label 0, so the
    result is independent of ``workers``.
    """
    graph = host_graph(host)
    size = graph.vertex_count
    limit = DEFAULT_EXHAUSTIVE_BUDGET if budget is None else budget
    if size > limit:
        raise BudgetError(
            f"exhaustive search over {size}! bijections exceeds the budget of "
            f"{limit} vertices"
        )
    if guest.vertex_count != size:
        raise DomainError(f"guest has {guest.vertex_count} vertices, host has {size}")
    dist = tuple(tuple(row) for row in distance_matrix(graph))
    edges = guest.graph.edges

    firsts = list(range(size))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            block_results = list(
                pool.map(_search_block, [dist] * size, [edges] * size, [size] * size, firsts)
            )
    else:
        block_results = [_search_block(dist, edges, size, f) for f in firsts]

    best_wl, best_map = min(block_results)
    evaluated = 1
    for i in range(2, size + 1):
        evaluated *= i
    # Re-evaluate the winner from scratch before reporting it.
    assert _wirelength(dist, edges, best_map) == best_wl
    return SearchResult(best_wl, best_map, evaluated, METHOD_EXHAUSTIVE, None)


def local_search(
    guest: QCube,
    host: Host,
    restarts: int = 0,
    seed: int = 0,
    budget: int | None = None,
    method: str = METHOD_DESCENT,
    start_temperature: float = 4.0,
    cooling: float = 0.999,
) -> SearchResult:
    """Random-restart two-swap search; ``restarts=0`` evaluates only the identity map.

    Identical arguments (seed included) always return the identical result.
    ``budget`` caps candidate evaluations per restart.
    """
    if restarts < 0:
        raise DomainError(f"restarts must be >= 0, got {restarts}")
    if method not in (METHOD_DESCENT, METHOD_ANNEAL):
        raise DomainError(f"unknown local-search method {method!r}")
    graph = host_graph(host)
    size = graph.vertex_count
    if guest.vertex_count != size:
        raise DomainError(f"guest has {guest.vertex_count} vertices, host has {size}")
    step_budget = DEFAULT_STEP_BUDGET if budget is None else budget
    dist = [list(row) for row in distance_matrix(graph)]
    edges = guest.graph.edges
    adjacency = guest.graph.adjacency

    rng = random.Random(seed)
    identity = tuple(range(size))
    best_wl = _wirelength(dist, edges, identity)
    best_map = identity
    evaluated = 1

    pair_pool = [(i, j) for i in range(size) for j in range(i + 1, size)]

    for _ in range(restarts):
        current = list(range(size))
        rng.shuffle(current)
        current_wl = _wirelength(dist, edges, current)
        evaluated += 1
        if method == METHOD_DESCENT:
            current_wl, used = _descend(dist, adjacency, current, current_wl, pair_pool, rng, step_budget)
        else:
            current_wl, used = _anneal(
                dist, adjacency, current, current_wl, rng, step_budget, start_temperature, cooling
            )
        evaluated += used
        candidate = tuple(current)
        if current_wl < best_wl or (current_wl == best_wl and candidate < best_map):
            best_wl = current_wl
            best_map = candidate

    assert _wirelength(dist, edges, best_map) == best_wl
    return SearchResult(best_wl, best_map, evaluated, method, seed)


def _swap_delta(
    dist: list[list[int]],
    adjacency: Sequence[Sequence[int]],
    mapping: list[int],
    i: int,
    j: int,
) -> int:
    """Wirelength change if the images of guest labels i and j trade places."""
    mi, mj = mapping[i], mapping[j]
    row_i, row_j = dist[mi], dist[mj]
    delta = 0
    for w in adjacency[i]:
        if w != j:
            mw = mapping[w]
            delta += row_j[mw] - row_i[mw]
    for w in adjacency[j]:
        if w != i:
            mw = mapping[w]
            delta += row_i[mw] - row_j[mw]
    return delta


def _descend(dist, adjacency, mapping, wirelength, pair_pool, rng, step_budget):
    """First-improvement descent over shuffled swap pairs until locally optimal."""
    used = 0
    pairs = list(pair_pool)
    improved = True
    while improved and used < step_budget:
        improved = False
        rng.shuffle(pairs)
        for i, j in pairs:
            used += 1
            delta = _swap_delta(dist, adjacency, mapping, i, j)
            if delta < 0:
                mapping[i], mapping[j] = mapping[j], mapping[i]
                wirelength += delta
                improved = True
                break
            if used >= step_budget:
                break
    return wirelength, used


def _anneal(dist, adjacency, mapping, wirelength, rng, step_budget, temperature, cooling):
    """Geometric-cooling annealing; returns the best state visited."""
    size = len(mapping)
    best_wl = wirelength
    best_state = list(mapping)
    for _ in range(step_budget):
        i = rng.randrange(size)
        j = rng.randrange(size - 1)
        if j >= i:
            j += 1
        delta = _swap_delta(dist, adjacency, mapping, i, j)
        if delta < 0 or (temperature > 1e-12 and rng.random() < _accept(delta, temperature)):
            mapping[i], mapping[j] = mapping[j], mapping[i]
            wirelength += delta
            if wirelength < best_wl:
                best_wl = wirelength
                best_state = list(mapping)
        temperature *= cooling
    mapping[:] = best_state
    return best_wl, step_budget


def _accept(delta: int, temperature: float) -> float:
    return math.exp(-delta / temperature)


def counterexample_report(kind: str, n: int, formula: int, result: SearchResult) -> dict:
    """Evidence bundle emitted when a search lands below the published formula."""
    return {
        "host": kind,
        "n": n,
        "formula_wirelength": formula,
        "search_wirelength": result.best_wirelength,
        "best_map": list(result.best_map),
        "method": result.method,
        "seed": result.seed,
        "evaluated": result.evaluated,
    }
