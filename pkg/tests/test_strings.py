import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from segrsk.errors import PreconditionError
from segrsk.lattice import LaurentPoly, Weight, cartan_form
from segrsk.multisegment import Multisegment, point_multisegment
from segrsk.oracle import EnumerationBounds, enumerate_multisegments
from segrsk.strings import (
    AdmissibleSequence,
    MultiplicityTable,
    beta_of,
    bz_derivative,
    bz_string,
    c_pair,
    c_prime_tuple,
    c_tuple,
    phi_multiseg,
    phi_weights,
    single_derivative,
    string_form,
    transfer_multiplicities,
)

M = Multisegment.of
alpha = Weight.alpha

vectors = st.integers(1, 5).flatmap(
    lambda t: st.tuples(
        st.just(AdmissibleSequence(tuple((-1) ** r * ((r + 1) // 2) for r in range(t)))),
        st.lists(st.integers(0, 3), min_size=t, max_size=t).map(tuple),
        st.lists(st.integers(0, 3), min_size=t, max_size=t).map(tuple),
    )
)


class TestAdmissibleSequence:
    def test_rejects_equal_neighbours(self):
        with pytest.raises(ValueError):
            AdmissibleSequence((1, 1, 2))

    def test_bz(self):
        assert AdmissibleSequence.bz(2).indices == (2, 1, 0, -1, -2)


class TestBetaOf:
    def test_examples(self):
        i = AdmissibleSequence((2, 1))
        assert beta_of(i, (1, 1)) == alpha(2) + alpha(1)
        assert beta_of(i, (0, 0)) == Weight.zero()
        i = AdmissibleSequence((1, 2, 1))
        assert beta_of(i, (1, 0, 2)) == 3 * alpha(1)

    def test_length_mismatch(self):
        with pytest.raises(PreconditionError):
            beta_of(AdmissibleSequence((2, 1)), (1,))


class TestStringForm:
    def test_basis_values(self):
        i = AdmissibleSequence((2, 1))
        assert string_form(i, (1, 0), (1, 0)) == 1
        assert string_form(i, (0, 1), (1, 0)) == -1  # r > u picks the Cartan value
        assert string_form(i, (1, 0), (0, 1)) == 0

    @given(vectors)
    def test_polarization(self, data):
        i, a1, a2 = data
        assert string_form(i, a1, a2) + string_form(i, a2, a1) == cartan_form(
            beta_of(i, a1), beta_of(i, a2)
        )


class TestPhiWeights:
    def test_single_is_zero(self):
        i = AdmissibleSequence.bz(2)
        assert phi_weights(i, [(0, 1, 0, 0, 0)], [alpha(1)]) == 0

    def test_ordered_pair(self):
        i = AdmissibleSequence.bz(2)
        a_for_1 = (0, 1, 0, 0, 0)
        a_for_2 = (1, 0, 0, 0, 0)
        assert phi_weights(i, [a_for_1, a_for_2], [alpha(1), alpha(2)]) == 0
        assert phi_weights(i, [a_for_2, a_for_1], [alpha(2), alpha(1)]) == 1

    def test_precondition(self):
        i = AdmissibleSequence.bz(1)
        with pytest.raises(PreconditionError):
            phi_weights(i, [(2, 0, 0)], [alpha(1)])  # beta(i,a) exceeds beta


class TestCCounts:
    def test_examples(self):
        assert c_pair(M((2, 3)), M((1, 1))) == 1
        assert c_pair(M((1, 1)), M((2, 2))) == 0
        assert c_prime_tuple([M((1, 1)), M((2, 2))]) == 0
        assert c_pair(M((1, 1)), Multisegment.empty()) == 0

    def test_prime_matches_shift(self):
        for m1, m2 in itertools.product(
            enumerate_multisegments(EnumerationBounds(-1, 1, 2)), repeat=2
        ):
            assert c_prime_tuple([m1, m2]) == c_pair(m1.shifted_right(), m2)

    def test_multiplicities(self):
        assert c_pair(M((2, 3), (2, 2)), M((1, 1), (1, 1))) == 4


class TestPhiMultiseg:
    def test_examples(self):
        assert phi_multiseg([M((1, 1)), M((2, 2))]) == 0
        assert phi_multiseg([M((2, 2)), M((1, 1))]) == 1
        assert phi_multiseg([M((1, 3), (2, 2))]) == 0

    def test_combi_identity_small(self):
        domain = list(enumerate_multisegments(EnumerationBounds(-1, 1, 2)))
        seq = AdmissibleSequence.bz(1)
        for ms in itertools.product(domain, repeat=2):
            phi = phi_multiseg(ms)
            assert c_tuple(ms) - c_prime_tuple(ms) == phi, str(ms)
            avecs = [bz_string(m, 1)[1] for m in ms]
            betas = [m.weight() for m in ms]
            assert phi_weights(seq, avecs, betas) == phi, str(ms)


class TestBzString:
    def test_examples(self):
        seq, a = bz_string(M((1, 3), (2, 2)), 3)
        assert seq.indices == (3, 2, 1, 0, -1, -2, -3)
        assert a == (0, 1, 1, 0, 0, 0, 0)
        assert bz_string(Multisegment.empty(), 2)[1] == (0, 0, 0, 0, 0)
        assert bz_string(M((1, 1), (1, 1)), 1)[1] == (2, 0, 0)

    def test_support_checked(self):
        with pytest.raises(PreconditionError):
            bz_string(M((1, 3)), 2)

    def test_additive(self):
        for m1, m2 in itertools.product(
            enumerate_multisegments(EnumerationBounds(-1, 1, 2)), repeat=2
        ):
            _, a1 = bz_string(m1, 2)
            _, a2 = bz_string(m2, 2)
            _, a12 = bz_string(m1 + m2, 2)
            assert tuple(x + y for x, y in zip(a1, a2)) == a12


class TestSingleDerivative:
    def test_examples(self):
        assert single_derivative(M((1, 3)), 1) == M((2, 3))
        assert single_derivative(M((1, 1), (1, 1)), 1) == Multisegment.empty()
        assert single_derivative(M((1, 3)), 5) == M((1, 3))

    def test_precondition_names_segment(self):
        with pytest.raises(PreconditionError, match=r"\[2,3\]"):
            single_derivative(M((1, 3), (2, 3)), 1)


class TestBzDerivative:
    def test_examples(self):
        assert bz_derivative(M((1, 3), (2, 2)), 3) == M((2, 3))
        gamma = alpha(0) + 2 * alpha(1)
        assert bz_derivative(point_multisegment(gamma), 2) == Multisegment.empty()
        assert bz_derivative(M((0, 1), (1, 2)), 2) == M((1, 1), (2, 2))

    def test_t_independence(self):
        for m in enumerate_multisegments(EnumerationBounds(-1, 1, 3)):
            assert bz_derivative(m, 1) == m.derived()
            assert bz_derivative(m, 4) == m.derived()

    def test_support_checked(self):
        with pytest.raises(PreconditionError):
            bz_derivative(M((-3, 0)), 2)


class TestMultiplicityTable:
    def test_rejects_mixed_weights(self):
        with pytest.raises(ValueError):
            MultiplicityTable(
                {M((1, 1)): LaurentPoly.one(), M((2, 2)): LaurentPoly.one()}
            )

    def test_rejects_negative_coeffs(self):
        with pytest.raises(ValueError):
            MultiplicityTable({M((1, 1)): LaurentPoly.q_power(0, -1)})

    def test_json_round_trip(self):
        table = MultiplicityTable(
            {
                M((1, 1), (2, 2)): LaurentPoly.one(),
                M((1, 2)): LaurentPoly.q_power(1),
            }
        )
        assert MultiplicityTable.from_json(table.to_json()) == table


class TestTransfer:
    def test_spec_example(self):
        table = MultiplicityTable(
            {
                M((1, 1), (2, 2)): LaurentPoly.one(),
                M((1, 2)): LaurentPoly.q_power(1),
            }
        )
        out = transfer_multiplicities(table, [M((1, 1)), M((2, 2))])
        assert out == MultiplicityTable({Multisegment.empty(): LaurentPoly.one()})

    def test_singleton(self):
        m = M((1, 3), (2, 2))
        table = MultiplicityTable({m: LaurentPoly.one()})
        out = transfer_multiplicities(table, [m])
        assert out == MultiplicityTable({m.derived(): LaurentPoly.one()})

    def test_empty_table(self):
        out = transfer_multiplicities(MultiplicityTable({}), [M((1, 1))])
        assert len(out) == 0

    def test_weight_mismatch_rejected(self):
        table = MultiplicityTable({M((1, 1)): LaurentPoly.one()})
        with pytest.raises(PreconditionError):
            transfer_multiplicities(table, [M((2, 2))])

    def test_survivors_share_bz_string(self):
        # surviving keys all realize the summed string of the tuple
        ms = [M((1, 1)), M((2, 3))]
        target_wt = ms[0].weight() + ms[1].weight()
        keys = [
            m
            for m in enumerate_multisegments(EnumerationBounds(1, 3, 3))
            if m.weight() == target_wt
        ]
        table = MultiplicityTable({k: LaurentPoly.one() for k in keys})
        survivors = [
            k
            for k, _ in table.items()
            if k.begin_weight() == ms[0].begin_weight() + ms[1].begin_weight()
        ]
        out = transfer_multiplicities(table, ms)
        assert len(out) == len(survivors)
        total = tuple(
            x + y for x, y in zip(bz_string(ms[0], 3)[1], bz_string(ms[1], 3)[1])
        )
        for k in survivors:
            assert bz_string(k, 3)[1] == total


def test_mutated_ell_form_is_caught(monkeypatch):
    """Flipping the ell form sign must trip the combi suite."""
    import segrsk.strings as strings_mod
    from segrsk.checks import suite_combi

    true_ell = strings_mod.ell_form
    monkeypatch.setattr(
        strings_mod, "ell_form", lambda b1, b2: -true_ell(b1, b2)
    )
    result = suite_combi(EnumerationBounds(0, 1, 1), seed=0, sample=10)
    assert result.failures
