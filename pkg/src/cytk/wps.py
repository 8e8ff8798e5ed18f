"""The weighted projective space P(w0, ..., w4), its coordinate strata and
their quotient singularities."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterator, Optional, Union


def _gcd_all(values) -> int:
    return reduce(gcd, values)


@dataclass(frozen=True)
class WeightSystem:
    """A degree d together with the five positive weights of the ambient
    weighted projective 4-space."""

    degree: int
    weights: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "degree", int(self.degree))
        if len(weights) != 5 or any(w <= 0 for w in weights):
            raise ValueError("a weight system needs five positive weights")
        if self.degree < max(weights):
            raise ValueError("degree must be at least the largest weight")
        if _gcd_all(weights) != 1:
            raise ValueError("weights must be globally coprime")

    def __str__(self) -> str:
        return f"X_{self.degree} in P{self.weights}"


_KINDS = {4: "vertex", 3: "edge", 2: "two-face"}


@dataclass(frozen=True)
class Stratum:
    """A coordinate stratum of P, recorded by its set of vanishing
    coordinates: 4 zeroed coordinates give a vertex, 3 an edge, 2 a
    two-face."""

    zeroed: tuple[int, ...]

    def __post_init__(self) -> None:
        zeroed = tuple(sorted(int(i) for i in self.zeroed))
        object.__setattr__(self, "zeroed", zeroed)
        if len(set(zeroed)) != len(zeroed) or not 2 <= len(zeroed) <= 4:
            raise ValueError("a stratum zeroes 2, 3 or 4 distinct coordinates")
        if any(i < 0 or i > 4 for i in zeroed):
            raise ValueError("coordinate indices run from 0 to 4")

    @property
    def kind(self) -> str:
        return _KINDS[len(self.zeroed)]

    @property
    def free(self) -> tuple[int, ...]:
        return tuple(i for i in range(5) if i not in self.zeroed)


def _canonical_quotient(order: int, a: int, b: int) -> tuple[int, tuple[int, int]]:
    """Reduce 1/m(a, b) to a faithful action and pick the lexicographically
    minimal representative under coordinate swap and generator rescaling."""
    m = order
    a %= m
    b %= m
    g = _gcd_all((a, b, m))
    if g > 1:
        m //= g
        a = (a // g) % m
        b = (b // g) % m
    if m < 2:
        raise ValueError("quotient order must be at least 2")
    best: Optional[tuple[int, int]] = None
    for u in range(1, m):
        if gcd(u, m) != 1:
            continue
        ua, ub = u * a % m, u * b % m
        for cand in ((ua, ub), (ub, ua)):
            if best is None or cand < best:
                best = cand
    assert best is not None
    return m, best


@dataclass(frozen=True)
class CyclicQuotientType:
    """The cyclic quotient surface germ of type 1/m(a, b).

    Instances are stored in canonical form: (a, b) is the lexicographically
    minimal pair among swaps and unit rescalings of the generator, so that
    e.g. 1/3(2, 1) and 1/3(1, 2) compare equal.
    """

    order: int
    local_weights: tuple[int, int]

    def __post_init__(self) -> None:
        m, pair = _canonical_quotient(int(self.order), *map(int, self.local_weights))
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "local_weights", pair)

    def __str__(self) -> str:
        a, b = self.local_weights
        return f"1/{self.order}({a},{b})"


StratumSingularity = Union[None, int, CyclicQuotientType]


def is_wellformed_hypersurface(ws: WeightSystem) -> bool:
    """Degree/weight conditions under which adjunction computes the canonical
    class of the general hypersurface: any four weights are coprime, and the
    gcd of any three weights divides the degree."""
    w = ws.weights
    for i in range(5):
        if _gcd_all([w[j] for j in range(5) if j != i]) != 1:
            return False
    for pair in combinations(range(5), 2):
        if ws.degree % _gcd_all([w[j] for j in range(5) if j not in pair]) != 0:
            return False
    return True


def stratum_singularity(ws: WeightSystem, stratum: Stratum) -> StratumSingularity:
    """Quotient-singularity data of the ambient space along a stratum.

    A two-face whose three free weights have gcd m > 1 meets the general
    hypersurface in a curve of transverse type 1/m(w_i mod m, w_j mod m),
    where i, j are the zeroed coordinates; that type is returned.  Singular
    edges and vertices only carry their local group order, returned as an
    int marker.  Non-singular strata give None.
    """
    w = ws.weights
    if stratum.kind == "vertex":
        weight = w[stratum.free[0]]
        return weight if weight > 1 else None
    if stratum.kind == "edge":
        m = _gcd_all([w[i] for i in stratum.free])
        return m if m > 1 else None
    m = _gcd_all([w[i] for i in stratum.free])
    if m == 1:
        return None
    i, j = stratum.zeroed
    return CyclicQuotientType(m, (w[i] % m, w[j] % m))


def all_strata() -> Iterator[Stratum]:
    """The 10 two-faces, 10 edges and 5 vertices, by (size, lex) order."""
    for size in (2, 3, 4):
        for zeroed in combinations(range(5), size):
            yield Stratum(zeroed)


def singular_strata(
    ws: WeightSystem,
) -> list[tuple[Stratum, Union[int, CyclicQuotientType]]]:
    """All strata along which the ambient space is singular, with their
    singularity data, in deterministic (size, lex) order."""
    found = []
    for stratum in all_strata():
        data = stratum_singularity(ws, stratum)
        if data is not None:
            found.append((stratum, data))
    return found
