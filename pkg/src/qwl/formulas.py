"""Closed-form minimum wirelengths and the three-engine cross-check.

All arithmetic is exact integer arithmetic.  ``cross_check`` evaluates the
closed form, the cut-congestion engine, and the distance engine side by side
and records whether they agree; disagreement is data, not an exception.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .embedding import lex_embedding, wirelength_by_cuts, wirelength_by_distance
from .errors import DomainError
from .hosts import (
    HOST_KINDS,
    KIND_BANANA,
    KIND_CATERPILLAR,
    KIND_CYLINDER,
    KIND_FIRECRACKER,
    build_host,
    normalize_kind,
)
from .qcube import build_qcube, iso_closed_form


def _require_dimension(n: int) -> None:
    if n < 2:
        raise DomainError(f"wirelength formulas are defined for n >= 2, got {n}")


def wl_cylinder(n: int) -> int:
    """Minimum wirelength into the triangle-times-path host."""
    _require_dimension(n)
    m = 3 ** (n - 1)
    return m * (2 * (m - 1) + 3)


def wl_caterpillar(n: int) -> int:
    """Minimum wirelength into the two-leaf caterpillar."""
    _require_dimension(n)
    m = 3 ** (n - 1)
    return 2 * m * (m - 1) + 4 * n * m


def wl_firecracker(n: int) -> int:
    """Minimum wirelength into the chained three-vertex stars."""
    _require_dimension(n)
    m = 3 ** (n - 1)
    return 2 * m * ((m - 1) + (2 * n - 1) + n)


def wl_banana(n: int) -> int:
    """Minimum wirelength into the two-star banana tree."""
    _require_dimension(n)
    c = (3**n + 1) // 2  # ceil(3^n / 2); 3^n is odd
    return 4 * n * (c - 3) + 4 * (c - 2) + 4 * (c - 1)


_FORMULAS = {
    KIND_CYLINDER: wl_cylinder,
    KIND_CATERPILLAR: wl_caterpillar,
    KIND_FIRECRACKER: wl_firecracker,
    KIND_BANANA: wl_banana,
}


def formula_value(kind: str, n: int) -> int:
    return _FORMULAS[normalize_kind(kind)](n)


def spine_cut_total(n: int) -> int:
    """Total congestion of the prefix cuts after each block of 3i labels.

    Equals 2 * M * (M - 1) with M = 3^(n-1); the identity ties the
    isoperimetric closed form to the path-shaped part of every host.
    """
    _require_dimension(n)
    m = 3 ** (n - 1)
    return sum(2 * n * 3 * i - 2 * iso_closed_form(3 * i, n) for i in range(1, m))


@dataclass(frozen=True)
class WirelengthRecord:
    """One host/dimension row of the cross-check; absent engines stay ``None``."""

    kind: str
    n: int
    formula_value: int
    cut_value: int | None = None
    distance_value: int | None = None
    agree: bool = field(init=False)

    def __post_init__(self) -> None:
        present = [
            v
            for v in (self.formula_value, self.cut_value, self.distance_value)
            if v is not None
        ]
        object.__setattr__(self, "agree", len(set(present)) == 1)


def cross_check(n: int, kinds: Iterable[str] | None = None) -> list[WirelengthRecord]:
    """Run all three engines for each host kind at dimension n."""
    _require_dimension(n)
    selected = [normalize_kind(k) for k in kinds] if kinds is not None else list(HOST_KINDS)
    guest = build_qcube(n)
    records = []
    for kind in selected:
        host = build_host(kind, n)
        emb = lex_embedding(guest, host)
        records.append(
            WirelengthRecord(
                kind=kind,
                n=n,
                formula_value=formula_value(kind, n),
                cut_value=wirelength_by_cuts(emb),
                distance_value=wirelength_by_distance(emb),
            )
        )
    return records


def records_to_csv(records: Sequence[WirelengthRecord]) -> str:
    """CSV regression artifact: host,n,formula,cuts,distance,agree."""
    lines = ["host,n,formula,cuts,distance,agree"]
    for r in records:
        cuts = "" if r.cut_value is None else str(r.cut_value)
        distance = "" if r.distance_value is None else str(r.distance_value)
        lines.append(
            f"{r.kind},{r.n},{r.formula_value},{cuts},{distance},{'true' if r.agree else 'false'}"
        )
    return "\n".join(lines) + "\n"
