from fractions import Fraction
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from dicke_ness import oracles
from dicke_ness.collective_spin import (
    CouplingScheme,
    DickeBasis,
    cg_table,
    clebsch_gordan,
    collective_operator_matrix,
    doubled,
    ladder_coefficient,
    log_binomial,
    log_ladder_coefficient,
)
from dicke_ness.errors import DomainError, NumericRangeError


@st.composite
def spin_and_q(draw, max_two_s=40):
    two_s = draw(st.integers(0, max_two_s))
    two_q = draw(st.sampled_from(range(-two_s, two_s + 1, 2)))
    return Fraction(two_s, 2), Fraction(two_q, 2)


class TestDickeBasis:
    def test_dimension(self):
        assert DickeBasis(7).dimension == 8

    @pytest.mark.parametrize("n", [1, 2, 5, 10])
    def test_index_round_trip(self, n):
        basis = DickeBasis(n)
        for i in range(basis.dimension):
            assert basis.index(basis.magnetic(i)) == i
        assert basis.magnetic(0) == -basis.total_spin

    def test_rejects_bad_magnetic_number(self):
        with pytest.raises(DomainError):
            DickeBasis(2).index(0.5)
        with pytest.raises(DomainError):
            DickeBasis(2).index(2)

    def test_rejects_zero_atoms(self):
        with pytest.raises(DomainError):
            DickeBasis(0)

    def test_doubled(self):
        assert doubled(1.5) == 3
        assert doubled(Fraction(-1, 2)) == -1
        with pytest.raises(DomainError):
            doubled(0.3)


class TestLadderCoefficient:
    @pytest.mark.parametrize("S", [0.5, 1, 3.5, 10])
    def test_top_annihilates(self, S):
        assert ladder_coefficient(S, S, 1) == 0.0
        assert log_ladder_coefficient(S, S, 1) == -math.inf

    @pytest.mark.parametrize("S,q", [(0.5, -0.5), (2, 1), (7.5, -3.5)])
    def test_empty_product(self, S, q):
        assert ladder_coefficient(S, q, 0) == 1.0
        assert log_ladder_coefficient(S, q, 0) == 0.0

    def test_spin_one(self):
        assert ladder_coefficient(1, -1, 1) == pytest.approx(math.sqrt(2), abs=1e-15)

    def test_invalid_pair(self):
        with pytest.raises(DomainError):
            ladder_coefficient(1, 0.5, 1)
        with pytest.raises(DomainError):
            ladder_coefficient(1, 2, 1)

    @given(spin_and_q(), st.integers(0, 40))
    def test_recursion(self, sq, n):
        S, q = sq
        lhs = ladder_coefficient(S, q, n + 1)
        step = (S - q - n) * (S + q + n + 1)
        rhs = ladder_coefficient(S, q, n) * math.sqrt(step) if step > 0 else 0.0
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @given(spin_and_q(), st.integers(0, 40))
    def test_log_matches_linear(self, sq, n):
        S, q = sq
        lin = ladder_coefficient(S, q, n)
        lg = log_ladder_coefficient(S, q, n)
        if lin == 0:
            assert lg == -math.inf
        else:
            assert lg == pytest.approx(math.log(lin), abs=1e-10)

    def test_overflow_is_reported(self):
        with pytest.raises(NumericRangeError):
            ladder_coefficient(300, -300, 600)
        assert math.isfinite(log_ladder_coefficient(300, -300, 600))

    def test_log_binomial(self):
        assert log_binomial(10, 3) == pytest.approx(math.log(120))
        assert log_binomial(3, 4) == -math.inf
        assert math.isfinite(log_binomial(1000, 500))


class TestCollectiveOperators:
    def test_single_atom_raise(self):
        up = collective_operator_matrix(DickeBasis(1), "raise")
        expected = np.zeros((2, 2))
        expected[1, 0] = 1.0
        np.testing.assert_array_equal(up, expected)

    def test_two_atom_raise_lowest(self):
        up = collective_operator_matrix(DickeBasis(2), "raise")
        out = up @ np.array([1.0, 0, 0])
        np.testing.assert_allclose(out, [0, math.sqrt(2), 0], atol=1e-15)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_su2_commutator(self, n):
        b = DickeBasis(n)
        up, down, z = (collective_operator_matrix(b, w) for w in ("raise", "lower", "z"))
        np.testing.assert_allclose(up @ down - down @ up, 2 * z, atol=1e-12)
        np.testing.assert_array_equal(down, up.conj().T)

    def test_matches_qubit_space(self):
        # Dicke-space S- agrees with the explicit 2^N collective lowering
        n = 4
        v = oracles.dicke_embedding(n)
        down = collective_operator_matrix(DickeBasis(n), "lower").real
        np.testing.assert_allclose(oracles.qubit_lowering_operator(n) @ v, v @ down, atol=1e-12)

    def test_unknown_operator(self):
        with pytest.raises(DomainError):
            collective_operator_matrix(DickeBasis(2), "x")


class TestClebschGordan:
    @pytest.mark.parametrize("n,m", [(2, 1), (5, 2), (9, 4)])
    def test_stretched_is_one(self, n, m):
        s = CouplingScheme(n, m)
        assert clebsch_gordan(s, s.j1, s.j2) == 1.0

    def test_two_qubits(self):
        # lower |up up> once in the explicit two-qubit space
        lower1 = np.array([[0.0, 1.0], [0.0, 0.0]])
        total = np.kron(lower1, np.eye(2)) + np.kron(np.eye(2), lower1)
        state = total @ np.array([0.0, 0.0, 0.0, 1.0])
        state /= np.linalg.norm(state)
        amp_up_down = state[2]  # |up>|down> with first factor the part
        c = clebsch_gordan(CouplingScheme(2, 1), 0.5, -0.5)
        assert c == pytest.approx(amp_up_down, abs=1e-15)
        assert c == pytest.approx(1 / math.sqrt(2), abs=1e-15)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_completeness(self, n):
        for m in range(1, n):
            t = cg_table(CouplingScheme(n, m))
            for i in range(n + 1):
                col = [t[a, i - a] for a in range(m + 1) if 0 <= i - a <= n - m]
                assert sum(c * c for c in col) == pytest.approx(1.0, abs=1e-13)

    @pytest.mark.parametrize("n", range(2, 11))
    def test_closed_form_matches_lowering(self, n):
        for m in range(1, n):
            t = cg_table(CouplingScheme(n, m))
            ref = oracles.coupled_state_coefficients(m, n - m)
            for a in range(m + 1):
                for b in range(n - m + 1):
                    assert t[a, b] == pytest.approx(ref[a + b, a, b], abs=1e-13)

    def test_out_of_range(self):
        s = CouplingScheme(4, 1)
        with pytest.raises(DomainError):
            clebsch_gordan(s, 1.5, 0)
        with pytest.raises(DomainError):
            CouplingScheme(4, 4)

    def test_table_read_only(self):
        t = cg_table(CouplingScheme(6, 2))
        with pytest.raises(ValueError):
            t[0, 0] = 2.0

    def test_large_n_finite(self):
        t = cg_table(CouplingScheme(400, 3))
        assert np.all(np.isfinite(t)) and t.max() <= 1.0


@pytest.mark.parametrize("n", range(1, 9))
def test_embedding_is_symmetric_isometry(n):
    v = oracles.dicke_embedding(n)
    np.testing.assert_allclose(v.T @ v, np.eye(n + 1), atol=1e-12)
    # column i has n - i excitations removed from |up...up>, i.e. i up-spins
    for i in range(n + 1):
        support = np.nonzero(np.abs(v[:, i]) > 1e-12)[0]
        assert all(bin(k).count("1") == i for k in support)
