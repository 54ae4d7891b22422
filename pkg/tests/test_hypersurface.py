import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weightedfano.errors import InvariantViolation, OutsideTheoremRange, PreconditionError, WeightsError
from weightedfano.hypersurface import (
    UNDETERMINED,
    WeightedHypersurface,
    check_generic_smooth,
    cohomology_rank_x,
    diagram_solve,
    fano_index,
    intersection_form_multiple,
    is_fano,
    is_trivial_cone,
    pullback_in_theorem_range,
    pullback_multiplier,
)
from weightedfano.verify import smooth_inputs

H = WeightedHypersurface.of


@st.composite
def smooth_hypersurfaces(draw, max_len=8, max_entry=8, max_degree=60):
    """Pairwise coprime weights padded with ones, and a degree divisible by each."""
    length = draw(st.integers(3, max_len))
    big = []
    for w in draw(st.lists(st.integers(2, max_entry), max_size=3)):
        if len(big) < length - 1 and all(math.gcd(w, x) == 1 for x in big):
            big.append(w)
    ws = [1] * (length - len(big)) + big
    step = math.lcm(*ws)
    d = step * draw(st.integers(1, max(1, max_degree // step)))
    return H(ws, d)


class TestConstruction:
    def test_bad_degree(self):
        with pytest.raises(WeightsError):
            H((1, 1, 1), 0)

    def test_ambient_too_small(self):
        with pytest.raises(WeightsError):
            H((1, 2), 2)

    def test_dims(self):
        h = H((1, 1, 1, 2, 3), 6)
        assert h.x_dim == 3 and h.ambient.dim == 4


class TestSmoothness:
    def test_pass(self):
        r = check_generic_smooth(H((1, 1, 1, 2, 3), 6))
        assert r.passed and r.verdict == "pass" and r.reasons() == []

    def test_degree_not_divisible(self):
        r = check_generic_smooth(H((1, 1, 1, 2, 3), 4))
        assert not r.passed
        assert r.offending_weights == (3,)
        assert "3" in r.reasons()[0]

    def test_not_coprime(self):
        r = check_generic_smooth(H((1, 1, 2, 4), 4))
        assert not r.passed and not r.pairwise_coprime

    def test_fano(self):
        assert is_fano(H((1, 1, 1, 1, 1), 4))
        assert not is_fano(H((1, 1, 1, 1, 1), 5))

    def test_trivial_cone(self):
        assert is_trivial_cone(H((1, 1, 1, 2), 2))
        assert not is_trivial_cone(H((1, 1, 1, 2), 4))


class TestInvariants:
    @pytest.mark.parametrize(
        "q, d, multiple, index",
        [
            ((1, 1, 1, 1, 2), 4, 2, 2),
            ((1, 1, 1, 2, 3), 6, 1, 2),
            ((1, 1, 1, 1, 3), 6, 2, 1),
            ((1, 1, 1, 1, 1), 4, 4, 1),
            ((1, 1, 1, 1, 1), 5, 5, 0),
        ],
    )
    def test_form_and_index(self, q, d, multiple, index):
        h = H(q, d)
        assert intersection_form_multiple(h) == multiple
        if is_fano(h):
            assert fano_index(h) == index

    def test_index_requires_fano(self):
        with pytest.raises(PreconditionError):
            fano_index(H((1, 1, 1, 1, 1), 5))

    def test_form_requires_smooth(self):
        with pytest.raises(PreconditionError):
            intersection_form_multiple(H((1, 1, 1, 1, 2), 3))

    def test_pullback_range(self):
        h = H((1, 1, 1, 1, 1, 1, 2), 4)  # ambient dim 6: 2r < 5
        assert [pullback_in_theorem_range(h, r) for r in range(4)] == [True, True, True, False]
        assert pullback_multiplier(h, 0) == 1
        with pytest.raises(OutsideTheoremRange):
            pullback_multiplier(h, 3)

    def test_range_error_is_precondition(self):
        assert issubclass(OutsideTheoremRange, PreconditionError)

    def test_pullback_divides_out_weights(self):
        # P(1,1,1,1,1,2,3) d=6: l_r is 6 for r >= 1, so every in-range multiplier is 6
        h = H((1, 1, 1, 1, 1, 2, 3), 6)
        assert [pullback_multiplier(h, r) for r in (1, 2)] == [6, 6]


class TestSpecialization:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_all_ones(self, n):
        for d in range(1, 13):
            h = H((1,) * (n + 2), d)
            assert intersection_form_multiple(h) == d
            assert all(
                pullback_multiplier(h, r) == 1 for r in range(n + 1) if pullback_in_theorem_range(h, r)
            )


class TestIntegrality:
    @settings(max_examples=300)
    @given(smooth_hypersurfaces())
    def test_exact_integers(self, h):
        # any InvariantViolation is a failure
        intersection_form_multiple(h)
        for r in range(h.ambient.dim):
            if pullback_in_theorem_range(h, r):
                assert pullback_multiplier(h, r) >= 1

    @settings(max_examples=300)
    @given(smooth_hypersurfaces())
    def test_form_multiple_positive_and_divides_degree_times_power(self, h):
        k = intersection_form_multiple(h)
        assert k >= 1
        assert k * h.levels[h.x_dim] ** h.x_dim == h.levels[h.x_dim + 1] ** (h.x_dim - 1) * h.degree

    def test_exhaustive_box(self):
        count = 0
        for q, d in smooth_inputs(6, 6, 20):
            h = H(q, d)
            intersection_form_multiple(h)
            count += 1
        assert count > 100


class TestDiagram:
    def test_quintic(self):
        dm = diagram_solve(H((1,) * 5, 5))
        assert dm.x_form == 5
        assert dm.i_star == 1 and dm.x_to_xprime_h2 == 1
        assert dm.commutes()

    def test_weighted(self):
        h = H((1, 1, 1, 2, 3), 6)
        dm = diagram_solve(h)
        assert dm.x_form == Fraction(intersection_form_multiple(h)) == 1
        assert dm.phi_star_h2 == 6
        assert dm.commutes()
        assert set(dm.checks) >= {"h2 triangle", "form square", "cup on ambient vs X"}

    def test_i_star_range_flag(self):
        assert not diagram_solve(H((1, 1, 1, 2), 2)).i_star_in_theorem_range
        assert diagram_solve(H((1,) * 5, 4)).i_star_in_theorem_range

    @settings(max_examples=200)
    @given(smooth_hypersurfaces())
    def test_commutes_everywhere(self, h):
        if h.x_dim >= 2:
            assert diagram_solve(h).commutes()

    def test_rejects_singular(self):
        with pytest.raises(PreconditionError):
            diagram_solve(H((1, 1, 2, 2), 4))


class TestCohomologyRank:
    def test_threefold(self):
        h = H((1, 1, 1, 2, 3), 6)
        assert [cohomology_rank_x(h, k) for k in range(3)] == [1, 0, 1]
        assert cohomology_rank_x(h, 3) == 2 * 21  # h^{3,0} = 0, h^{2,1} = 21
        assert cohomology_rank_x(h, 4) is UNDETERMINED
        assert [cohomology_rank_x(h, k) for k in (5, 6)] == [0, 1]

    def test_surface_middle(self):
        assert cohomology_rank_x(H((1, 1, 1, 1), 3), 2) == 7

    def test_out_of_range(self):
        with pytest.raises(WeightsError):
            cohomology_rank_x(H((1, 1, 1, 1), 3), 5)
