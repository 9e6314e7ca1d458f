"""The 3-ary n-cube guest graph and its edge-isoperimetric profile.

The cube on 3^n vertices is the n-fold cartesian product of triangles: vertices
are ternary words, and two words are adjacent iff they differ in exactly one
digit.  ``iso_closed_form`` evaluates the maximum number of edges a k-vertex
subset can induce; ``lex_prefix_induced`` and ``brute_force_iso`` provide two
independent ways to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetError, DomainError
from .graph import LabeledGraph

# Guest cubes above this dimension are refused by default (3^6 = 729 vertices).
DEFAULT_MAX_DIMENSION = 6
# Exhaustive subset enumeration is refused above this many vertices.
DEFAULT_SUBSET_BUDGET = 12


@dataclass(frozen=True)
class TernaryWord:
    """A fixed-length word over {0, 1, 2}, most significant digit first."""

    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.digits:
            raise DomainError("a ternary word needs at least one digit")
        if any(d not in (0, 1, 2) for d in self.digits):
            raise DomainError(f"digits must be 0, 1, or 2, got {self.digits}")
        object.__setattr__(self, "digits", tuple(self.digits))

    @property
    def n(self) -> int:
        return len(self.digits)

    @property
    def label(self) -> int:
        value = 0
        for d in self.digits:
            value = value * 3 + d
        return value

    @classmethod
    def from_label(cls, label: int, n: int) -> "TernaryWord":
        if not (0 <= label < 3**n):
            raise DomainError(f"label {label} outside 0..{3 ** n - 1}")
        digits = []
        for _ in range(n):
            digits.append(label % 3)
            label //= 3
        return cls(tuple(reversed(digits)))

    def complement(self) -> "TernaryWord":
        return TernaryWord(tuple(2 - d for d in self.digits))


def digit_complement(word: TernaryWord) -> TernaryWord:
    """Digit-wise involution x -> 2 - x; on labels it acts as L -> 3^n - 1 - L."""
    return word.complement()


@dataclass(frozen=True)
class QCube:
    """Dimension plus the labeled graph; label L carries word digits of L base 3."""

    n: int
    graph: LabeledGraph

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count


def build_qcube(n: int, max_n: int = DEFAULT_MAX_DIMENSION) -> QCube:
    """Build the 3-ary n-cube; 2n-regular with n * 3^n edges."""
    if not 1 <= n <= max_n:
        raise DomainError(f"dimension must satisfy 1 <= n <= {max_n}, got {n}")
    size = 3**n
    edges: list[tuple[int, int]] = []
    for label in range(size):
        power = 1
        for _ in range(n):
            digit = (label // power) % 3
            for other in (0, 1, 2):
                if other == digit:
                    continue
                neighbor = label + (other - digit) * power
                if neighbor > label:
                    edges.append((label, neighbor))
            power *= 3
    roles = {
        label: "digit-tuple:" + "".join(map(str, TernaryWord.from_label(label, n).digits))
        for label in range(size)
    }
    return QCube(n, LabeledGraph(size, edges, roles))


@dataclass(frozen=True)
class TernaryDecomposition:
    """k written as a sum of 3-powers with non-increasing exponents.

    A base-3 digit d at position p contributes d copies of exponent p, listed
    most significant first: 8 -> (1, 1, 0, 0), 9 -> (2,), 13 -> (2, 1, 0).
    """

    k: int
    exponents: tuple[int, ...]


def ternary_decompose(k: int) -> TernaryDecomposition:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    digits = []  # least significant first
    rest = k
    while rest:
        digits.append(rest % 3)
        rest //= 3
    exponents: list[int] = []
    for pos in range(len(digits) - 1, -1, -1):
        exponents.extend([pos] * digits[pos])
    return TernaryDecomposition(k, tuple(exponents))


def iso_closed_form(k: int, n: int) -> int:
    """Maximum edge count induced by k vertices of the 3-ary n-cube.

    With k = 3^(e_1) + ... + 3^(e_r), exponents non-increasing, the value is
    sum over i of (e_i + i - 1) * 3^(e_i).
    """
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    if not 1 <= k <= 3**n:
        raise DomainError(f"k must satisfy 1 <= k <= {3 ** n}, got {k}")
    decomposition = ternary_decompose(k)
    if any(e > n for e in decomposition.exponents):
        raise DomainError(f"decomposition of {k} uses a power above 3^{n}")
    return sum((e + i) * 3**e for i, e in enumerate(decomposition.exponents))


def lex_prefix_induced(cube: QCube, k: int) -> int:
    """Edges induced by the first k labels; matches iso_closed_form for every k."""
    if not 1 <= k <= cube.vertex_count:
        raise DomainError(f"k must satisfy 1 <= k <= {cube.vertex_count}, got {k}")
    # Edges are endpoint-sorted, so both ends are below k iff the larger one is.
    return sum(1 for _, v in cube.graph.edges if v < k)


def lex_prefix_profile(cube: QCube) -> tuple[int, ...]:
    """Induced edge counts of all prefixes 1..3^n in one linear pass."""
    adjacency = cube.graph.adjacency
    counts = []
    total = 0
    for label in range(cube.vertex_count):
        total += sum(1 for w in adjacency[label] if w < label)
        counts.append(total)
    return tuple(counts)


def brute_force_iso(cube: QCube, k: int, budget: int | None = None) -> int:
    """Exact maximum induced edge count by enumerating every k-subset.

    Refuses cubes above ``budget`` vertices (default 12); use
    ``lex_prefix_induced`` for larger instances.
    """
    limit = DEFAULT_SUBSET_BUDGET if budget is None else budget
    size = cube.vertex_count
    if size > limit:
        raise BudgetError(
            f"{size} vertices exceed the exhaustive subset budget of {limit}; "
            "use lex_prefix_induced instead"
        )
    if not 1 <= k <= size:
        raise DomainError(f"k must satisfy 1 <= k <= {size}, got {k}")
    masks = [0] * size
    for u, v in cube.graph.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    best = 0
    for subset in combinations(range(size), k):
        picked = 0
        for v in subset:
            picked |= 1 << v
        inside = sum((masks[v] & picked).bit_count() for v in subset) // 2
        if inside > best:
            best = inside
    return best


@dataclass(frozen=True)
class IsoProfile:
    """I(k) and its increments for k = 1..3^n."""

    n: int
    induced: tuple[int, ...]
    delta: tuple[int, ...]

    def to_csv(self) -> str:
        lines = ["k,I,delta"]
        for i, (value, step) in enumerate(zip(self.induced, self.delta), start=1):
            lines.append(f"{i},{value},{step}")
        return "\n".join(lines) + "\n"


def iso_profile(n: int, max_n: int = DEFAULT_MAX_DIMENSION) -> IsoProfile:
    if not 1 <= n <= max_n:
        raise DomainError(f"dimension must satisfy 1 <= n <= {max_n}, got {n}")
    induced = tuple(iso_closed_form(k, n) for k in range(1, 3**n + 1))
    delta = tuple(
        induced[i] - (induced[i - 1] if i else 0) for i in range(len(induced))
    )
    return IsoProfile(n, induced, delta)
