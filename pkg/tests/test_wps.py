import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cytk.wps import (
    CyclicQuotientType,
    Stratum,
    WeightSystem,
    is_wellformed_hypersurface,
    singular_strata,
    stratum_singularity,
)

X1734 = WeightSystem(1734, (91, 96, 102, 578, 867))
X120 = WeightSystem(120, (3, 7, 20, 40, 50))
X56 = WeightSystem(56, (2, 4, 9, 13, 28))
QUINTIC = WeightSystem(5, (1, 1, 1, 1, 1))


class TestWeightSystem:
    def test_rejects_common_factor(self):
        with pytest.raises(ValueError):
            WeightSystem(10, (2, 2, 2, 2, 2))

    def test_rejects_degree_below_max_weight(self):
        with pytest.raises(ValueError):
            WeightSystem(3, (1, 1, 1, 1, 5))

    def test_rejects_nonpositive_weight(self):
        with pytest.raises(ValueError):
            WeightSystem(5, (1, 1, 1, 1, 0))


class TestStratum:
    def test_kinds(self):
        assert Stratum((0, 1)).kind == "two-face"
        assert Stratum((0, 1, 2)).kind == "edge"
        assert Stratum((0, 1, 2, 3)).kind == "vertex"

    def test_free_coordinates(self):
        assert Stratum((0, 1, 4)).free == (2, 3)

    def test_rejects_bad_sizes(self):
        with pytest.raises(ValueError):
            Stratum((0,))
        with pytest.raises(ValueError):
            Stratum((0, 1, 2, 3, 4))


class TestCyclicQuotientType:
    def test_swap_equivalence(self):
        assert CyclicQuotientType(3, (1, 2)) == CyclicQuotientType(3, (2, 1))

    def test_unit_rescaling_equivalence(self):
        assert CyclicQuotientType(17, (6, 11)) == CyclicQuotientType(17, (1, 16))
        assert CyclicQuotientType(10, (3, 7)) == CyclicQuotientType(10, (1, 9))

    def test_display_is_canonical(self):
        assert str(CyclicQuotientType(3, (2, 1))) == "1/3(1,2)"
        assert str(CyclicQuotientType(2, (1, 1))) == "1/2(1,1)"

    def test_non_faithful_action_reduces(self):
        assert CyclicQuotientType(6, (2, 4)) == CyclicQuotientType(3, (1, 2))

    def test_order_one_rejected(self):
        with pytest.raises(ValueError):
            CyclicQuotientType(1, (0, 0))


class TestWellformed:
    def test_worked_examples_are_wellformed(self):
        assert is_wellformed_hypersurface(X120)
        assert is_wellformed_hypersurface(X56)
        assert is_wellformed_hypersurface(X1734)

    def test_common_factor_in_four_weights_fails(self):
        assert not is_wellformed_hypersurface(WeightSystem(10, (1, 2, 2, 2, 2)))


class TestStratumSingularity:
    def test_x1734_two_faces(self):
        assert stratum_singularity(X1734, Stratum((0, 1))) == CyclicQuotientType(
            17, (6, 11)
        )
        assert stratum_singularity(X1734, Stratum((0, 3))) == CyclicQuotientType(
            3, (1, 2)
        )
        assert stratum_singularity(X1734, Stratum((0, 4))) == CyclicQuotientType(
            2, (1, 1)
        )

    def test_x120_two_face(self):
        assert stratum_singularity(X120, Stratum((0, 1))) == CyclicQuotientType(
            10, (3, 7)
        )

    def test_smooth_ambient_space(self):
        for zeroed in [(0, 1), (0, 1, 2), (0, 1, 2, 3)]:
            assert stratum_singularity(QUINTIC, Stratum(zeroed)) is None

    def test_vertex_and_edge_markers(self):
        assert stratum_singularity(X120, Stratum((1, 2, 3, 4))) == 3
        assert stratum_singularity(X120, Stratum((0, 1, 2))) == 10  # gcd(40, 50)


class TestSingularStrata:
    def test_x1734_has_exactly_three_singular_two_faces(self):
        faces = [
            (s.zeroed, data)
            for s, data in singular_strata(X1734)
            if s.kind == "two-face"
        ]
        assert faces == [
            ((0, 1), CyclicQuotientType(17, (6, 11))),
            ((0, 3), CyclicQuotientType(3, (1, 2))),
            ((0, 4), CyclicQuotientType(2, (1, 1))),
        ]

    def test_smooth_space_is_empty(self):
        assert singular_strata(QUINTIC) == []

    def test_x120_strata_match_direct_gcd_evaluation(self):
        # independent oracle: evaluate the gcd conditions stratum by stratum
        from itertools import combinations
        from math import gcd

        w = X120.weights
        expected = set()
        for zeroed in combinations(range(5), 2):
            free = [w[i] for i in range(5) if i not in zeroed]
            m = gcd(gcd(free[0], free[1]), free[2])
            if m > 1:
                expected.add(("two-face", zeroed))
        for zeroed in combinations(range(5), 3):
            free = [w[i] for i in range(5) if i not in zeroed]
            if gcd(free[0], free[1]) > 1:
                expected.add(("edge", zeroed))
        for zeroed in combinations(range(5), 4):
            (i,) = [i for i in range(5) if i not in zeroed]
            if w[i] > 1:
                expected.add(("vertex", zeroed))
        got = {(s.kind, s.zeroed) for s, _ in singular_strata(X120)}
        assert got == expected
        faces = [z for kind, z in got if kind == "two-face"]
        assert faces == [(0, 1)]

    def test_at_most_ten_singular_two_faces(self):
        count = sum(1 for s, _ in singular_strata(X1734) if s.kind == "two-face")
        assert count <= 10


@st.composite
def weight_systems(draw):
    weights = draw(
        st.lists(st.integers(min_value=1, max_value=30), min_size=5, max_size=5)
    )
    from math import gcd

    g = 0
    for w in weights:
        g = gcd(g, w)
    if g > 1:
        weights[0] = 1
    degree = draw(st.integers(min_value=max(weights), max_value=150))
    return WeightSystem(degree, tuple(weights))


class TestPermutationInvariance:
    @settings(max_examples=80, deadline=None)
    @given(ws=weight_systems(), seed=st.randoms())
    def test_two_face_types_stable_under_relabeling(self, ws, seed):
        perm = list(range(5))
        seed.shuffle(perm)
        permuted = WeightSystem(ws.degree, tuple(ws.weights[p] for p in perm))

        def face_types(system):
            return sorted(
                str(data)
                for s, data in singular_strata(system)
                if s.kind == "two-face"
            )

        assert face_types(ws) == face_types(permuted)
