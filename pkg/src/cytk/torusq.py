"""Finite groups of affine automorphisms of a complex 2-torus, in lattice
coordinates, and the du Val multiset of the quotient surface.

An automorphism is a pair (M, t): a 4x4 integer matrix acting on the rank-4
lattice plus a rational translation class mod Z^4.  Validation enforces the
constraints satisfied by canonical quotients: element orders in {1,2,3,4,6},
no non-trivial translations, at most one involution, and linear parts whose
characteristic polynomial is the realification of an SL(2,C) element of the
right order.  The complex structure itself is never represented.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from cytk.arith import (
    InfiniteSolutionsError,
    NoSolutionError,
    charpoly,
    determinant,
    solve_congruence,
)
from cytk.surface import DuValMultiset, DuValType

IntMatrix = tuple[tuple[int, ...], ...]
Point = tuple[Fraction, Fraction, Fraction, Fraction]

DEFAULT_CAP = 48
ALLOWED_ORDERS = frozenset({1, 2, 3, 4, 6})

# Realifications of SL(2,C) elements of each finite order: these are the
# only characteristic polynomials a canonical linear part may have.
_CANONICAL_CHARPOLY = {
    1: (1, -4, 6, -4, 1),  # (x-1)^4
    2: (1, 4, 6, 4, 1),  # (x+1)^4
    3: (1, 2, 3, 2, 1),  # (x^2+x+1)^2
    4: (1, 0, 2, 0, 1),  # (x^2+1)^2
    6: (1, -2, 3, -2, 1),  # (x^2-x+1)^2
}


class ActionValidationError(ValueError):
    """The generated transformation set is not a canonical torus action."""


def _identity_matrix() -> IntMatrix:
    return tuple(tuple(int(i == j) for j in range(4)) for i in range(4))


def _mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4))
        for i in range(4)
    )


@dataclass(frozen=True)
class AffineTorusMap:
    """A lattice automorphism x -> M x + t of the torus R^4 / Z^4, with M
    integral of determinant +-1 and t taken mod Z^4."""

    linear: IntMatrix
    translation: Point

    def __post_init__(self) -> None:
        linear = tuple(tuple(int(x) for x in row) for row in self.linear)
        if len(linear) != 4 or any(len(r) != 4 for r in linear):
            raise ValueError("linear part must be a 4x4 integer matrix")
        if abs(determinant(linear)) != 1:
            raise ValueError("linear part must be unimodular")
        translation = tuple(Fraction(t) % 1 for t in self.translation)
        if len(translation) != 4:
            raise ValueError("translation must have 4 coordinates")
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "translation", translation)

    @classmethod
    def identity(cls) -> "AffineTorusMap":
        return cls(_identity_matrix(), (Fraction(0),) * 4)

    @property
    def is_identity(self) -> bool:
        return self.linear == _identity_matrix() and all(
            t == 0 for t in self.translation
        )

    @property
    def is_translation(self) -> bool:
        return self.linear == _identity_matrix()

    def __mul__(self, other: "AffineTorusMap") -> "AffineTorusMap":
        """Composition self o other: (M1, t1)(M2, t2) = (M1 M2, M1 t2 + t1)."""
        linear = _mat_mul(self.linear, other.linear)
        translation = tuple(
            (
                sum(
                    (Fraction(m) * t for m, t in zip(row, other.translation)),
                    Fraction(0),
                )
                + t1
            )
            % 1
            for row, t1 in zip(self.linear, self.translation)
        )
        return AffineTorusMap(linear, translation)

    def apply(self, point: Sequence[Fraction]) -> Point:
        return tuple(
            (
                sum((Fraction(m) * p for m, p in zip(row, point)), Fraction(0))
                + t
            )
            % 1
            for row, t in zip(self.linear, self.translation)
        )

    def order(self, cap: int = DEFAULT_CAP) -> int:
        power = self
        for n in range(1, cap + 1):
            if power.is_identity:
                return n
            power = power * self
        raise ActionValidationError(f"element order exceeds {cap}")


def fixed_points(g: AffineTorusMap) -> frozenset[Point]:
    """The fixed points of g on the torus: solutions of (M - I) x = -t
    mod Z^4.  Finite with exactly |det(M - I)| elements when M - I is
    non-singular; raises InfiniteSolutionsError for a compatible singular
    system (g then fixes a positive-dimensional set)."""
    a = tuple(
        tuple(m - int(i == j) for j, m in enumerate(row))
        for i, row in enumerate(g.linear)
    )
    b = [-t for t in g.translation]
    try:
        return solve_congruence(a, b)
    except NoSolutionError:
        return frozenset()
    except InfiniteSolutionsError:
        raise InfiniteSolutionsError("infinitely many fixed points")


@dataclass(frozen=True)
class TorusAction:
    """A validated finite group of affine torus automorphisms."""

    label: str
    generators: tuple[AffineTorusMap, ...]
    elements: tuple[AffineTorusMap, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


def close_group(
    generators: Iterable[AffineTorusMap],
    label: str = "",
    cap: int = DEFAULT_CAP,
) -> TorusAction:
    """Close the generators under composition and validate the result.

    Raises ActionValidationError when the closure exceeds ``cap`` elements,
    contains several involutions, contains a non-trivial translation, has an
    element of order outside {1,2,3,4,6}, or has a linear part that is not
    the realification of an SL(2,C) element of matching order.
    """
    generators = tuple(generators)
    elements = {AffineTorusMap.identity()}
    frontier = list(generators)
    while frontier:
        g = frontier.pop()
        if g in elements:
            continue
        elements.add(g)
        if len(elements) > cap:
            raise ActionValidationError(f"not finite within cap {cap}")
        for h in list(elements):
            for product in (g * h, h * g):
                if product not in elements:
                    frontier.append(product)

    ordered = tuple(sorted(elements, key=lambda g: (g.linear, g.translation)))
    involutions = [g for g in ordered if not g.is_identity and (g * g).is_identity]
    if len(involutions) > 1:
        raise ActionValidationError(f"multiple involutions ({len(involutions)})")
    for g in ordered:
        if g.is_translation and not g.is_identity:
            raise ActionValidationError("contains nontrivial translation")
    for g in ordered:
        n = g.order(cap=len(ordered))
        if n not in ALLOWED_ORDERS:
            raise ActionValidationError(f"element of forbidden order {n}")
        if charpoly(g.linear) != _CANONICAL_CHARPOLY[n]:
            raise ActionValidationError(
                f"linear part of an order-{n} element is not an SL(2,C) "
                "realification"
            )
    return TorusAction(label=label, generators=generators, elements=ordered)


# Recognition of stabilizer subgroups by (order, element-order histogram);
# within the validated orders this separates the possible classes uniquely.
_STABILIZER_CLASSES: Mapping[tuple[int, tuple[tuple[int, int], ...]], tuple[str, DuValType]] = {
    (2, ((1, 1), (2, 1))): ("Z2", DuValType("A", 1)),
    (3, ((1, 1), (3, 2))): ("Z3", DuValType("A", 2)),
    (4, ((1, 1), (2, 1), (4, 2))): ("Z4", DuValType("A", 3)),
    (6, ((1, 1), (2, 1), (3, 2), (6, 2))): ("Z6", DuValType("A", 5)),
    (8, ((1, 1), (2, 1), (4, 6))): ("BD8", DuValType("D", 4)),
    (12, ((1, 1), (2, 1), (3, 2), (4, 6), (6, 2))): ("BD12", DuValType("D", 5)),
    (24, ((1, 1), (2, 1), (3, 8), (4, 6), (6, 8))): ("BT24", DuValType("E", 6)),
}


def _classify_stabilizer(stabilizer: Sequence[AffineTorusMap]) -> tuple[str, DuValType]:
    histogram: dict[int, int] = {}
    for g in stabilizer:
        histogram[g.order()] = histogram.get(g.order(), 0) + 1
    key = (len(stabilizer), tuple(sorted(histogram.items())))
    if key not in _STABILIZER_CLASSES:
        raise ActionValidationError(f"unrecognized stabilizer {key}")
    return _STABILIZER_CLASSES[key]


@dataclass(frozen=True)
class Orbit:
    """One orbit of singular points with its stabilizer data."""

    representative: Point
    size: int
    stabilizer_order: int
    stabilizer_class: str
    du_val: DuValType


@dataclass(frozen=True)
class QuotientReport:
    label: str
    group_order: int
    orbits: tuple[Orbit, ...]
    multiset: DuValMultiset


def quotient_singularities(action: TorusAction) -> QuotientReport:
    """Collect the fixed points of all non-identity elements, group them
    into orbits, and read each orbit's du Val type off its stabilizer."""
    points: set[Point] = set()
    for g in action.elements:
        if not g.is_identity:
            points.update(fixed_points(g))

    orbits: list[Orbit] = []
    seen: set[Point] = set()
    for point in sorted(points):
        if point in seen:
            continue
        orbit = {g.apply(point) for g in action.elements}
        seen.update(orbit)
        stabilizer = [g for g in action.elements if g.apply(point) == point]
        if len(orbit) * len(stabilizer) != action.order:
            raise ActionValidationError("orbit-stabilizer mismatch")
        name, du_val = _classify_stabilizer(stabilizer)
        orbits.append(
            Orbit(
                representative=min(orbit),
                size=len(orbit),
                stabilizer_order=len(stabilizer),
                stabilizer_class=name,
                du_val=du_val,
            )
        )
    multiset = DuValMultiset(tuple((orbit.du_val, 1) for orbit in orbits))
    return QuotientReport(
        label=action.label,
        group_order=action.order,
        orbits=tuple(orbits),
        multiset=multiset,
    )


def _frac4(*values: str | int | Fraction) -> Point:
    return tuple(Fraction(v) for v in values)


_ZERO = _frac4(0, 0, 0, 0)


def _linear(rows: Sequence[Sequence[int]]) -> AffineTorusMap:
    return AffineTorusMap(tuple(tuple(r) for r in rows), _ZERO)


def _block_diag(b1: Sequence[Sequence[int]], b2: Sequence[Sequence[int]]) -> list[list[int]]:
    out = [[0] * 4 for _ in range(4)]
    for i in range(2):
        for j in range(2):
            out[i][j] = b1[i][j]
            out[2 + i][2 + j] = b2[i][j]
    return out

# Factor-swap with a sign: (z1, z2) -> (z2, -z1).  Integral whenever both
# factors use the same lattice basis.
_SWAP = [
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
]

# Multiplication matrices on C/(Z + Z*tau) in the basis (1, tau):
#   tau = j  (j^2 = -1 - j, a primitive cube root of unity)
_MUL_J = [[0, -1], [1, -1]]
_MUL_J2 = [[-1, 1], [-1, 0]]
#   tau = omega  (omega^2 = omega - 1, a primitive sixth root of unity)
_MUL_W = [[0, -1], [1, 1]]
_MUL_W_INV = [[1, 1], [-1, 0]]
#   tau = i (Gaussian lattice)
_MUL_I = [[0, -1], [1, 0]]
_MUL_I_INV = [[0, 1], [-1, 0]]

# The lattice L8 of C^2 spanned by (1,1), (1,-1), (i-1,0), (0,i-1), in that
# basis: the multiplications a: (z1,z2) -> (i z1, -i z2), the factor swap
# b: (z1,z2) -> (z2, -z1), and c, one sixth of the binary tetrahedral group.
_L8_A = [
    [0, 1, -1, 1],
    [1, 0, -1, -1],
    [1, 1, -1, 0],
    [-1, 1, 0, 1],
]
_L8_B = [
    [0, -1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, -1, 0],
]
_L8_C = [
    [1, 1, -1, 0],
    [0, 0, 0, -1],
    [1, 0, 0, -1],
    [0, 1, 0, 1],
]
# (1, 0) and (1/2, -i/2) of C^2 in L8 coordinates.
_L8_SHIFT_B = _frac4("1/2", "1/2", 0, 0)
_L8_SHIFT_C = _frac4(0, "1/2", 0, "-1/2")


def _builtin_specs() -> list[tuple[str, str, list[AffineTorusMap]]]:
    neg_id = _linear([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])
    swap = _linear(_SWAP)
    l8_a = _linear(_L8_A)
    l8_b = _linear(_L8_B)
    l8_c = _linear(_L8_C)
    l8_b_shifted = AffineTorusMap(tuple(tuple(r) for r in _L8_B), _L8_SHIFT_B)
    l8_c_shifted = AffineTorusMap(tuple(tuple(r) for r in _L8_C), _L8_SHIFT_C)
    return [
        ("kummer", "16A1", [neg_id]),
        ("z3-diagonal", "9A2", [_linear(_block_diag(_MUL_J, _MUL_J2))]),
        ("z4-square", "4A3+6A1", [swap]),
        ("z6-diagonal", "A5+4A2+5A1", [_linear(_block_diag(_MUL_W, _MUL_W_INV))]),
        ("bd8-shifted", "6A3+A1", [l8_a, l8_b_shifted]),
        (
            "bd8-gaussian",
            "2D4+3A3+2A1",
            [_linear(_block_diag(_MUL_I, _MUL_I_INV)), swap],
        ),
        ("bd8-linear", "4D4+3A1", [l8_a, l8_b]),
        ("bd12-linear", "D5+3A3+2A2+A1", [swap, _linear(_block_diag(_MUL_W, _MUL_W_INV))]),
        ("bt24-shifted", "A5+2A3+4A2", [l8_a, l8_b_shifted, l8_c_shifted]),
        ("bt24-linear", "E6+D4+4A2+A1", [l8_a, l8_b, l8_c]),
    ]


BUILTIN_EXPECTED: dict[str, DuValMultiset] = {
    name: DuValMultiset.parse(expected) for name, expected, _ in _builtin_specs()
}


def builtin_actions() -> list[TorusAction]:
    """The ten named example actions realizing the classified quotient
    multisets, each validated on construction."""
    return [
        close_group(generators, label=name)
        for name, _, generators in _builtin_specs()
    ]


def builtin_action(name: str) -> TorusAction:
    for label, _, generators in _builtin_specs():
        if label == name:
            return close_group(generators, label=label)
    raise KeyError(f"unknown builtin action {name!r}")


def action_from_json(data: dict, cap: int = DEFAULT_CAP) -> TorusAction:
    """Build a validated action from the JSON form
    {"label": str, "generators": [{"linear": [[int;4];4],
    "translation": ["p/q";4]}]}."""
    try:
        label = data.get("label", "")
        generators = [
            AffineTorusMap(
                tuple(tuple(int(x) for x in row) for row in entry["linear"]),
                tuple(Fraction(str(t)) for t in entry["translation"]),
            )
            for entry in data["generators"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise ActionValidationError(f"malformed action description: {exc}") from exc
    return close_group(generators, label=label, cap=cap)


def load_action(path: str, cap: int = DEFAULT_CAP) -> TorusAction:
    with open(path, encoding="utf-8") as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ActionValidationError(f"invalid JSON: {exc}") from exc
    return action_from_json(data, cap=cap)
