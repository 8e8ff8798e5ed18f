"""Analysis of the general degree-d hypersurface X in P(w0, ..., w4):
quasismoothness, the trivial-canonical-class degree condition, edge
containment, the stratified singular locus, and the positivity bound for
the orbifold second Chern class."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, prod
from typing import Iterator

from cytk.arith import attainable_sums, is_partitionable
from cytk.wps import CyclicQuotientType, WeightSystem


class NotQuasismoothError(ValueError):
    """The general hypersurface of this weight system is not quasismooth."""


class NotCalabiYauError(ValueError):
    """The degree is not the sum of the weights."""


@dataclass(frozen=True)
class ContainedEdge:
    """An edge of P lying entirely inside X; it is a curve of X, singular
    when the two free weights share a factor."""

    zeroed: tuple[int, int, int]
    free_weights: tuple[int, int]
    singular: bool


@dataclass(frozen=True)
class EdgePointLocus:
    """A singular edge of P not contained in X; it meets X in finitely many
    singular points of local order ``order``."""

    zeroed: tuple[int, int, int]
    order: int


@dataclass(frozen=True)
class SingularCurve:
    """The curve cut on X by a singular two-face, with its transverse
    cyclic quotient type."""

    zeroed: tuple[int, int]
    quotient: CyclicQuotientType


@dataclass(frozen=True)
class SingularLocusReport:
    """Stratified description of the singular locus of the general X."""

    singular_vertices: tuple[int, ...]
    contained_edges: tuple[ContainedEdge, ...]
    edge_point_loci: tuple[EdgePointLocus, ...]
    singular_curves: tuple[SingularCurve, ...]

    @property
    def is_empty(self) -> bool:
        return not (
            self.singular_vertices
            or self.contained_edges
            or self.edge_point_loci
            or self.singular_curves
        )


@dataclass(frozen=True)
class C2BoundReport:
    """Exact lower bound d*(4q - 2s) / (10N) for c2_orb(X) . O_X(1), where
    N is the product of the weights, s their second elementary symmetric
    function and q the sum of their squares."""

    lower_bound: Fraction
    positive: bool


@lru_cache(maxsize=16384)
def _pair_sums(w1: int, w2: int, limit: int) -> int:
    return attainable_sums((w1, w2), limit)


def is_calabi_yau_degree(ws: WeightSystem) -> bool:
    """True iff the degree equals the sum of the weights, so that the
    general hypersurface has trivial canonical class."""
    return ws.degree == sum(ws.weights)


def is_quasismooth(ws: WeightSystem) -> bool:
    """Arithmetic quasismoothness criterion for the general hypersurface.

    (1) every weight w_i divides d - w_j for some j (j = i allowed);
    (2) every pair of weights partitions d - w_{j1} and d - w_{j2} for two
        distinct indices j1 != j2;
    (3) every set of three or more weights partitions d.
    """
    d, w = ws.degree, ws.weights
    for i in range(5):
        if all((d - w[j]) % w[i] != 0 for j in range(5)):
            return False
    for i1, i2 in combinations(range(5), 2):
        reach = _pair_sums(w[i1], w[i2], d)
        hits = sum(1 for j in range(5) if reach >> (d - w[j]) & 1)
        if hits < 2:
            return False
    for size in (3, 4, 5):
        for idx in combinations(range(5), size):
            if not is_partitionable(d, tuple(w[i] for i in idx)):
                return False
    return True


def _edges(ws: WeightSystem) -> Iterator[tuple[tuple[int, ...], tuple[int, int], int, bool]]:
    """(zeroed, free weights, gcd of free weights, contained-in-X) per edge."""
    d, w = ws.degree, ws.weights
    for free in combinations(range(5), 2):
        zeroed = tuple(i for i in range(5) if i not in free)
        pair = (w[free[0]], w[free[1]])
        contained = not bool(_pair_sums(pair[0], pair[1], d) >> d & 1)
        yield zeroed, pair, gcd(*pair), contained


def contained_edges(ws: WeightSystem) -> tuple[ContainedEdge, ...]:
    """The edges of P lying entirely in X: those whose two free weights do
    not partition d.  Deterministic (lex on zeroed coordinates) order."""
    return tuple(
        ContainedEdge(zeroed, pair, g > 1)
        for zeroed, pair, g, contained in _edges(ws)
        if contained
    )


def _stratified_locus(ws: WeightSystem) -> SingularLocusReport:
    """The stratified singular locus, computed without any precondition."""
    d, w = ws.degree, ws.weights
    vertices = tuple(i for i in range(5) if w[i] > 1 and d % w[i] != 0)
    in_x = []
    point_loci = []
    for zeroed, pair, g, contained in _edges(ws):
        if contained:
            in_x.append(ContainedEdge(zeroed, pair, g > 1))
        elif g > 1:
            point_loci.append(EdgePointLocus(zeroed, g))
    curves = []
    for zeroed in combinations(range(5), 2):
        free = [w[i] for i in range(5) if i not in zeroed]
        m = gcd(gcd(free[0], free[1]), free[2])
        if m > 1:
            i, j = zeroed
            curves.append(
                SingularCurve(zeroed, CyclicQuotientType(m, (w[i] % m, w[j] % m)))
            )
    return SingularLocusReport(
        singular_vertices=vertices,
        contained_edges=tuple(in_x),
        edge_point_loci=tuple(point_loci),
        singular_curves=tuple(curves),
    )


def singular_locus(ws: WeightSystem) -> SingularLocusReport:
    """Stratified singular locus of the general quasismooth hypersurface.

    Raises :class:`NotQuasismoothError` when the quasismoothness criterion
    fails, since the stratification argument needs X to be a suborbifold.
    """
    if not is_quasismooth(ws):
        raise NotQuasismoothError(f"not quasismooth: {ws}")
    return _stratified_locus(ws)


def is_smooth_in_codim2(ws: WeightSystem) -> bool:
    """True iff the singular locus of X contains no curve: no singular
    two-face and no contained singular edge."""
    report = singular_locus(ws)
    return not report.singular_curves and not any(
        e.singular for e in report.contained_edges
    )


def contains_no_edge(ws: WeightSystem) -> bool:
    """True iff X contains no edge of P at all (singular or not), i.e.
    every pair of weights partitions d."""
    if not is_quasismooth(ws):
        raise NotQuasismoothError(f"not quasismooth: {ws}")
    return not contained_edges(ws)


def c2_lower_bound(ws: WeightSystem) -> C2BoundReport:
    """Exact lower bound for c2_orb(X) . O_X(1) when d = sum of weights.

    The bound is d*(4q - 2s)/(10N) = d * sum_{i<j} (w_i - w_j)^2 / (10N);
    it is strictly positive unless all the weights are equal.
    """
    if not is_calabi_yau_degree(ws):
        raise NotCalabiYauError(f"degree is not the weight sum: {ws}")
    w = ws.weights
    d = ws.degree
    q = sum(x * x for x in w)
    s = sum(w[i] * w[j] for i, j in combinations(range(5), 2))
    n = prod(w)
    bound = Fraction(d * (4 * q - 2 * s), 10 * n)
    return C2BoundReport(lower_bound=bound, positive=len(set(w)) > 1)
