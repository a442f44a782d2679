import pytest
from hypothesis import given
from hypothesis import strategies as st

from segrsk.errors import ParseError
from segrsk.lattice import (
    DominantWeight,
    LaurentPoly,
    Weight,
    cartan_form,
    ell_form,
)

alpha = Weight.alpha

weights = st.builds(
    Weight,
    st.lists(
        st.tuples(st.integers(-6, 6), st.integers(-4, 4)), max_size=6
    ),
)


class TestCartanForm:
    def test_basis_values(self):
        assert cartan_form(alpha(0), alpha(0)) == 2
        assert cartan_form(alpha(0), alpha(1)) == -1
        assert cartan_form(alpha(0), alpha(5)) == 0

    @given(weights, weights)
    def test_symmetric(self, b1, b2):
        assert cartan_form(b1, b2) == cartan_form(b2, b1)

    @given(weights, weights, weights)
    def test_bilinear(self, b1, b2, b3):
        assert cartan_form(b1 + b2, b3) == cartan_form(b1, b3) + cartan_form(b2, b3)


class TestEllForm:
    def test_basis_values(self):
        assert ell_form(alpha(1), alpha(1)) == 1
        assert ell_form(alpha(1), alpha(2)) == -1
        assert ell_form(alpha(2), alpha(1)) == 0

    @given(weights, weights)
    def test_polarization(self, b1, b2):
        assert ell_form(b1, b2) + ell_form(b2, b1) == cartan_form(b1, b2)


class TestWeightOps:
    def test_height(self):
        assert (alpha(1) + 2 * alpha(2)).height() == 3
        assert Weight.zero().height() == 0

    def test_cone_order(self):
        assert alpha(1).leq(alpha(1) + alpha(2))
        assert not alpha(1).leq(alpha(2))
        assert Weight.zero().leq(alpha(0))
        assert not alpha(0).leq(Weight.zero())

    def test_dagger(self):
        assert (alpha(1) + alpha(3)).dagger() == alpha(-1) + alpha(-3)

    @given(weights)
    def test_dagger_involution(self, w):
        assert w.dagger().dagger() == w
        assert w.dagger().height() == w.height()

    @given(weights, weights)
    def test_dagger_preserves_cartan(self, b1, b2):
        assert cartan_form(b1.dagger(), b2.dagger()) == cartan_form(b1, b2)

    def test_subcone(self):
        assert (alpha(-2) + alpha(2)).in_subcone(2)
        assert not (alpha(-3) + alpha(2)).in_subcone(2)
        assert not (-1 * alpha(0)).in_subcone(2)

    def test_no_stored_zeros(self):
        assert (alpha(1) - alpha(1)) == Weight.zero()
        assert Weight([(3, 2), (3, -2)]).items() == ()

    @given(weights)
    def test_text_round_trip(self, w):
        assert Weight.parse(str(w)) == w

    def test_text_form(self):
        assert str(2 * alpha(1) + alpha(3)) == "2*a(1)+a(3)"
        assert Weight.parse("2*a(1)+a(3)") == 2 * alpha(1) + alpha(3)
        assert Weight.parse("0") == Weight.zero()
        with pytest.raises(ParseError):
            Weight.parse("a(1)+bogus")

    @given(weights)
    def test_json_round_trip(self, w):
        assert Weight.from_json(w.to_json()) == w


class TestDominantWeight:
    def test_level(self):
        lam = DominantWeight.from_indices([2, 1, -1])
        assert lam.level() == 3
        assert lam.coeff(1) == 1

    def test_dagger(self):
        lam = DominantWeight.from_indices([2, 1, -1])
        assert lam.dagger() == DominantWeight.from_indices([-2, -1, 1])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            DominantWeight([(0, -1)])


polys = st.builds(
    LaurentPoly,
    st.lists(st.tuples(st.integers(-5, 5), st.integers(-9, 9)), max_size=5),
)


class TestLaurentPoly:
    def test_shift(self):
        assert LaurentPoly.one().shift(-2) == LaurentPoly.q_power(-2)

    def test_add(self):
        q_plus_1 = LaurentPoly.q_power(1) + LaurentPoly.one()
        assert q_plus_1 + LaurentPoly.q_power(0, -1) == LaurentPoly.q_power(1)

    def test_eval_at_one(self):
        p = LaurentPoly.q_power(2) + LaurentPoly.q_power(1, 2)
        assert p.eval_at_one() == 3

    @given(polys, polys)
    def test_add_commutes(self, p, q):
        assert p + q == q + p

    @given(polys, polys, polys)
    def test_mul_distributes(self, p, q, r):
        assert p * (q + r) == p * q + p * r

    @given(polys, st.integers(-4, 4))
    def test_shift_is_q_power_mul(self, p, k):
        assert p.shift(k) == p * LaurentPoly.q_power(k)
        assert p.shift(k).eval_at_one() == p.eval_at_one()

    @given(polys)
    def test_json_round_trip(self, p):
        assert LaurentPoly.from_json(p.to_json()) == p

    def test_str(self):
        p = LaurentPoly.q_power(2) + LaurentPoly.q_power(0, 3) + LaurentPoly.q_power(-1)
        assert str(p) == "q^2 + 3 + q^-1"
        assert str(LaurentPoly.zero()) == "0"
