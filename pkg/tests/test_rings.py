import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from orbifold_ring import (
    ChowBasisIndex, ChowElement, ChowRing, ModelElement, ModelRing,
    chow_basis, chow_cup, chow_degree, chow_pairing, dual_index, eta,
    is_gorenstein, linear_combine, make_weights, model_cup, model_degree,
    model_integral, model_pairing, poincare_polynomial, xi,
)

W = (1, 2, 3)
SIXTH = F(1, 6)

small_weights = st.lists(st.integers(1, 6), min_size=1, max_size=3).map(make_weights)


class TestElements:
    def test_zero_identity(self):
        x = 2 * eta(0, 1) + eta("1/3")
        assert x + ChowElement.zero() == x
        assert x + (-1) * x == 0
        assert not (x - x)

    def test_merge(self):
        assert 2 * eta(0, 1) + 3 * eta(0, 1) == 5 * eta(0, 1)
        assert linear_combine(ChowElement, [(2, ChowBasisIndex(F(0), 1)),
                                            (3, ChowBasisIndex(F(0), 1))]) == 5 * eta(0, 1)

    def test_no_zero_coefficients_stored(self):
        z = ModelElement({1: 0, 2: F(1, 2)})
        assert dict(z) == {2: F(1, 2)}

    def test_rings_do_not_mix(self):
        with pytest.raises(TypeError):
            eta(0) + xi(0)
        assert eta(0) != xi(0)

    def test_hash_and_repr(self):
        assert hash(3 * xi(2)) == hash(xi(2) * 3)
        assert "eta(gamma=1/3, 0)" in repr(eta("1/3"))
        assert repr(ModelElement()) == "ModelElement(0)"


class TestChowRing:
    def test_basis(self):
        assert chow_basis(W) == tuple(ChowBasisIndex(F(g), d) for g, d in [
            (0, 0), (0, 1), (0, 2), ("1/3", 0), ("1/2", 0), ("2/3", 0)])
        assert chow_basis((1, 1)) == (ChowBasisIndex(0, 0), ChowBasisIndex(0, 1))
        assert chow_basis((2,)) == (ChowBasisIndex(0, 0), ChowBasisIndex(F(1, 2), 0))

    @given(small_weights)
    def test_basis_size(self, w):
        assert len(chow_basis(w)) == w.total

    @pytest.mark.parametrize("b, deg", [
        ((0, 0), 0), ((0, 1), 1), ((0, 2), 2), ((F(1, 3), 0), 1), ((F(1, 2), 0), 1)])
    def test_degree(self, b, deg):
        assert chow_degree(W, b) == deg

    def test_degree_invalid_index(self):
        with pytest.raises(ValueError):
            chow_degree(W, (F(1, 3), 1))
        with pytest.raises(ValueError):
            chow_degree(W, (F(1, 6), 0))

    def test_cup_examples(self):
        assert chow_cup(W, eta("2/3"), eta("1/3")) == eta(0, 2)
        assert chow_cup(W, eta(0, 1), eta(0, 2)) == 0          # exceeds dimension
        assert chow_cup(W, eta("1/3"), eta("1/2")) == 0        # empty sector 5/6
        x = 3 * eta(0, 1) - eta("1/2")
        assert chow_cup(W, eta(0), x) == x

    def test_cup_bilinear(self):
        x = eta(0, 1) + 2 * eta("1/3")
        y = eta(0, 1) + eta("2/3")
        assert chow_cup(W, x, y) == eta(0, 2) + 2 * eta(0, 2)

    def test_pairing_examples(self):
        assert chow_pairing(W, eta(0, 0), eta(0, 2)) == SIXTH
        assert chow_pairing(W, eta("1/3"), eta("1/2")) == 0
        assert chow_pairing(W, eta("1/3"), eta("2/3")) == SIXTH
        assert chow_pairing(W, eta(0, 1), eta(0, 1)) == SIXTH
        assert chow_pairing(W, eta(0, 0), eta(0, 1)) == 0

    @given(small_weights)
    def test_degree_shift_nonnegative(self, w):
        ring = ChowRing(w)
        for a, b in itertools.product(ring.basis, repeat=2):
            g = (a.g + b.g) % 1
            assert ring.degree(a) + ring.degree(b) - oracles.age(g, w.entries) >= 0

    @given(small_weights)
    def test_duals(self, w):
        ring = ChowRing(w)
        for b in ring.basis:
            d = ring.dual(b)
            assert ring.basis_pairing(b, d) == F(1, w.product)
            assert ring.dual(d) == b


class TestModelRing:
    def test_degrees(self):
        assert [model_degree(W, j) for j in range(6)] == [0, 1, 2, 1, 1, 1]

    def test_non_gorenstein_degrees(self):
        degs = [model_degree((1, 1, 3), j) for j in range(5)]
        assert degs == oracles.model_degrees((1, 1, 3)) == [0, 1, 2, F(4, 3), F(2, 3)]
        assert F(4, 3) in degs

    @given(small_weights)
    def test_first_degree_zero_and_bounds(self, w):
        assert model_degree(w, 0) == 0
        for j in range(w.total):
            assert 0 <= model_degree(w, j) <= w.n

    def test_degree_out_of_range(self):
        with pytest.raises(ValueError):
            model_degree(W, 6)

    @pytest.mark.parametrize("j, k, expected", [(1, 1, 2), (2, 2, None), (3, 5, 2), (4, 4, 2), (1, 3, None)])
    def test_cup(self, j, k, expected):
        want = 0 if expected is None else xi(expected)
        assert model_cup(W, xi(j), xi(k)) == want

    @given(small_weights)
    def test_cup_matches_oracle_table(self, w):
        table = oracles.model_table(w.entries)
        ring = ModelRing(w)
        for (j, k), m in table.items():
            assert ring.basis_cup(j, k) == m

    def test_unit(self):
        z = 2 * xi(3) - xi(5)
        assert model_cup(W, xi(0), z) == z

    def test_integral(self):
        assert model_integral(W, xi(2)) == SIXTH
        assert model_integral(W, xi(5)) == 0
        assert model_integral(W, 3 * xi(2) + xi(1)) == F(1, 2)

    def test_pairing(self):
        assert model_pairing(W, xi(0), xi(2)) == SIXTH
        assert model_pairing(W, xi(3), xi(5)) == SIXTH
        assert model_pairing(W, xi(1), xi(3)) == 0
        assert model_pairing(W, xi(1) + xi(3), xi(1) + xi(5)) == 2 * SIXTH

    @pytest.mark.parametrize("j, k", [(0, 2), (1, 1), (3, 5), (2, 0), (4, 4)])
    def test_dual_index(self, j, k):
        assert dual_index(W, j) == k

    @given(small_weights)
    def test_dual_index_properties(self, w):
        for j in range(w.total):
            k = dual_index(w, j)
            assert dual_index(w, k) == j
            assert (j + k) % w.total == w.n
            assert model_degree(w, j) + model_degree(w, k) == w.n
            assert model_pairing(w, xi(j), xi(k)) == F(1, w.product)
            assert [m for m in range(w.total) if model_pairing(w, xi(j), xi(m))] == [k]

    def test_poincare(self):
        assert poincare_polynomial(W) == {0: 1, 1: 4, 2: 1}
        assert poincare_polynomial((1, 1)) == {0: 1, 1: 1}
        assert poincare_polynomial((1, 1, 1)) == {0: 1, 1: 1, 2: 1}

    @given(small_weights)
    def test_poincare_symmetric(self, w):
        poly = poincare_polynomial(w)
        assert sum(poly.values()) == w.total
        assert all(poly.get(w.n - u) == m for u, m in poly.items())

    @pytest.mark.parametrize("w, expected", [((1, 2, 3), True), ((1, 1, 2), True), ((1, 1, 3), False)])
    def test_gorenstein(self, w, expected):
        assert is_gorenstein(w) is expected

    @settings(max_examples=50)
    @given(small_weights)
    def test_gorenstein_implies_integral_degrees(self, w):
        if is_gorenstein(w):
            assert all(model_degree(w, j).denominator == 1 for j in range(w.total))
