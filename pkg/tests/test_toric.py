import math
from itertools import combinations, permutations, product

import pytest
from hypothesis import given, strategies as st

from weightedfano.arith import pairwise_coprime
from weightedfano.errors import PreconditionError
from weightedfano.toric import (
    build_rays,
    cone_multiplicity,
    contains_all_rays,
    coordinates,
    determinant,
    hermite_normal_form,
    lattice_basis,
    singular_locus_dimension,
)

small_weights = st.lists(st.integers(1, 6), min_size=2, max_size=5)


class TestRays:
    def test_p1(self):
        r = build_rays((1, 1))
        assert r.rows == ((-1,), (1,)) and r.scale == 1

    def test_p112(self):
        r = build_rays((1, 1, 2))
        assert r.scale == 2
        assert r.rows == ((-2, -2), (2, 0), (0, 1))

    def test_pn(self):
        r = build_rays((1, 1, 1, 1))
        assert r.rows == ((-1, -1, -1), (1, 0, 0), (0, 1, 0), (0, 0, 1))

    @given(small_weights)
    def test_linear_relation(self, q):
        r = build_rays(q)
        assert all(sum(qi * row[c] for qi, row in zip(q, r.rows)) == 0 for c in range(r.dim))


class TestLinearAlgebra:
    def test_determinant(self):
        assert determinant([[2, 0], [0, 1]]) == 2
        assert determinant([[0, 1], [1, 0]]) == -1
        assert determinant([[1, 2], [2, 4]]) == 0
        assert determinant([[2, -1, 0], [-1, 2, -1], [0, -1, 2]]) == 4

    def test_hnf_shape(self):
        h = hermite_normal_form([[4, 6], [2, 3], [0, 5]])
        assert h == [[2, 3], [0, 5]]

    @given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3), min_size=3, max_size=5))
    def test_hnf_same_lattice(self, rows):
        h = hermite_normal_form(rows)
        full = len(h) == 3
        if full:
            basis = lattice_basis_from(h)
            # every input row is an integer combination of the HNF rows
            for r in rows:
                coordinates(basis, r)
            # and the HNF rows have the same covolume as the gcd of maximal minors of the input
            minors = [abs(determinant(list(c))) for c in combinations(rows, 3)]
            assert abs(determinant(h)) == math.gcd(*minors)


def lattice_basis_from(h):
    from weightedfano.toric import LatticeBasis

    return LatticeBasis(tuple(map(tuple, h)), determinant(h))


class TestLattice:
    def test_p1(self):
        assert lattice_basis(build_rays((1, 1))).basis == ((1,),)

    def test_p112(self):
        assert abs(lattice_basis(build_rays((1, 1, 2))).determinant) == 2

    def test_pn(self):
        assert lattice_basis(build_rays((1, 1, 1, 1))).basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    @given(small_weights)
    def test_contains_rays(self, q):
        r = build_rays(q)
        assert contains_all_rays(r, lattice_basis(r))

    def test_deterministic(self):
        assert lattice_basis(build_rays((2, 3, 5))) == lattice_basis(build_rays((2, 3, 5)))


class TestMultiplicity:
    def setup_method(self):
        self.rays = build_rays((1, 1, 2))
        self.lattice = lattice_basis(self.rays)

    def test_p112(self):
        # the A1 point (0:0:1) is the orbit of the cone not containing v_2
        assert cone_multiplicity(self.rays, self.lattice, {0, 1}) == 2
        assert cone_multiplicity(self.rays, self.lattice, {1, 2}) == 1
        assert cone_multiplicity(self.rays, self.lattice, {0, 2}) == 1

    def test_smooth_fan(self):
        r = build_rays((1, 1, 1, 1))
        lat = lattice_basis(r)
        for size in range(1, 4):
            for cone in combinations(range(4), size):
                assert cone_multiplicity(r, lat, cone) == 1

    def test_too_many_rays(self):
        with pytest.raises(PreconditionError):
            cone_multiplicity(self.rays, self.lattice, {0, 1, 2})

    def test_generator_order_irrelevant(self):
        r = build_rays((1, 2, 3, 5))
        lat = lattice_basis(r)
        for cone in combinations(range(4), 3):
            vals = {cone_multiplicity(r, lat, p) for p in permutations(cone)}
            assert len(vals) == 1

    @pytest.mark.parametrize("q", [(1, 2, 3), (1, 1, 2, 3), (2, 3, 5, 7), (1, 3, 4, 5)])
    def test_full_cone_is_omitted_weight(self, q):
        # well-formed weights: the cone without v_i has multiplicity q_i
        r = build_rays(q)
        lat = lattice_basis(r)
        for i in range(len(q)):
            cone = [j for j in range(len(q)) if j != i]
            assert cone_multiplicity(r, lat, cone) == q[i]
            assert cone_multiplicity(r, lat, cone, primitive=True) == q[i]

    def test_primitive_variant_differs_only_off_well_formed(self):
        # P(1,2,4) is P(1,1,2) in disguise
        assert singular_locus_dimension((1, 2, 4)) == 1
        assert singular_locus_dimension((1, 2, 4), primitive=True) == 0


class TestSingularLocus:
    @pytest.mark.parametrize("q, dim", [((1, 1, 1, 2, 3), 0), ((1, 1, 1, 1), -1), ((1, 1), -1)])
    def test_examples(self, q, dim):
        assert singular_locus_dimension(q) == dim

    def test_p124_positive(self):
        assert singular_locus_dimension((1, 2, 4)) >= 1

    def test_equivalence_when_gcd_is_one(self):
        # Both directions, exhaustive over reduced tuples in the box
        for k in range(2, 6):
            for q in product(range(1, 7), repeat=k):
                if math.gcd(*q) == 1:
                    assert (singular_locus_dimension(q) <= 0) == pairwise_coprime(q), q

    def test_scale_invariance(self):
        # the fan of q and of g*q agree, so no lattice computation can tell them apart
        for q in [(1, 1), (1, 2, 3), (1, 1, 2, 3)]:
            for g in (2, 3):
                gq = tuple(g * x for x in q)
                assert singular_locus_dimension(gq) == singular_locus_dimension(q)
                assert not pairwise_coprime(gq)
