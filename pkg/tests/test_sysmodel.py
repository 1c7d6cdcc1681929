import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import complex_horner, det2, repeated_power, subset_coefficients
from rotpoly.errors import DimensionMismatch, NonPositive
from rotpoly.horner1d import PolySpec
from rotpoly.sysmodel import (
    StateSpace,
    TimeConstantForm,
    expand_roots,
    leverrier,
    leverrier_closed_form_check,
    mat_pow,
    mat_pow_counted,
    root_coefficient,
    ss_to_tf,
    tc_to_tf,
    to_bits,
)

FIXTURE = StateSpace([[0, 1], [-2, -3]], [0, 1], [1, 0])


class TestExpandRoots:
    def test_two_roots(self):
        assert expand_roots([-1, -2]) == [1, 3, 2]
        assert root_coefficient([-1, -2], 1) == 3
        assert root_coefficient([-1, -2], 2) == 2

    def test_empty(self):
        assert expand_roots([]) == [1.0]

    def test_single(self):
        assert expand_roots([-5]) == [1, 5]

    def test_bad_index(self):
        with pytest.raises(ValueError):
            root_coefficient([1, 2], 3)

    @given(st.lists(st.integers(-9, 9), max_size=8))
    def test_matches_subset_enumeration(self, roots):
        assert expand_roots(roots) == subset_coefficients(roots)


class TestTimeConstants:
    def test_first_order_lowpass(self):
        tf = tc_to_tf(TimeConstantForm((), (1.0,)))
        assert tf.gain == 1.0
        assert tf.denominator.alpha == (1.0, 1.0)
        assert tf.numerator.alpha == (1.0,)

    def test_lead(self):
        tf = tc_to_tf(TimeConstantForm((2.0,), (1.0, 1.0)))
        assert tf.gain == 2.0
        assert tf.numerator.alpha == (1.0, 0.5)
        assert tf.denominator.alpha == (1.0, 2.0, 1.0)

    def test_empty(self):
        tf = tc_to_tf(TimeConstantForm((), ()))
        assert (tf.gain, tf.numerator.alpha, tf.denominator.alpha) == (1.0, (1.0,), (1.0,))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            TimeConstantForm((1.0,), (0.0,))

    def test_round_trip(self, rng):
        for _ in range(50):
            tn = [rng.uniform(0.05, 5) for _ in range(rng.randint(0, 6))]
            td = [rng.uniform(0.05, 5) for _ in range(rng.randint(len(tn), 6))]
            tf = tc_to_tf(TimeConstantForm(tuple(tn), tuple(td)))
            for _ in range(20):
                s = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
                direct = math.prod(1 + t * s for t in tn) / math.prod(1 + t * s for t in td)
                got = tf.gain * complex_horner(tf.numerator.alpha, s) / complex_horner(
                    tf.denominator.alpha, s)
                assert abs(got - direct) <= 1e-9 * abs(direct)


class TestLeverrier:
    def test_fixture(self):
        res = leverrier(FIXTURE)
        assert res.p_coeffs == [1, 3, 2]
        assert res.q_coeffs == [0, 1]
        tf = ss_to_tf(FIXTURE)
        assert tf.numerator.alpha == (1.0,)
        assert tf.denominator.alpha == (1.0, 3.0, 2.0)

    def test_scalar(self):
        res = leverrier(StateSpace([[4.0]], [1], [1]))
        assert res.p_coeffs == [1, -4]
        assert res.q_coeffs == [1]

    def test_identity3(self):
        assert leverrier(StateSpace(np.eye(3), np.ones(3), np.ones(3))).p_coeffs == [1, -3, 3, -1]

    def test_fixture_against_adjugate(self):
        # adj(sI - A) for 2x2 A = [[s - d, b], [c, s - a]]; hand-expanded
        a = FIXTURE.a_matrix
        res = leverrier(FIXTURE)
        f1, f2 = res.f_matrices
        assert np.array_equal(f1, np.eye(2))
        assert np.array_equal(f2, np.array([[-a[1, 1], a[0, 1]], [a[1, 0], -a[0, 0]]]))
        assert res.p_coeffs[2] == det2(a.tolist())

    def test_three_by_three_adjugate(self):
        a = np.array([[1.0, 2, 0], [0, -1, 3], [2, 1, 1]])
        b = np.array([1.0, 0, 2])
        c = np.array([0.0, 1, 1])
        res = leverrier(StateSpace(a, b, c))
        # C adj(sI - A) B = det(sI - A) * C (sI - A)^-1 B at three sample points
        for s in (0.3, 1.7, -2.2):
            m = s * np.eye(3) - a
            lhs = np.linalg.det(m) * (c @ np.linalg.solve(m, b))
            rhs = sum(q * s ** (2 - k) for k, q in enumerate(res.q_coeffs))
            assert lhs == pytest.approx(rhs, rel=1e-12)
            assert np.linalg.det(m) == pytest.approx(
                sum(p * s ** (3 - k) for k, p in enumerate(res.p_coeffs)), rel=1e-12)

    @pytest.mark.parametrize("diag", [[1, 2, 3], [-1, 4, 0, 2], [5], [2, 2, -3, 1, 7]])
    def test_diagonal_matches_root_expansion(self, diag):
        n = len(diag)
        res = leverrier(StateSpace(np.diag(diag), np.ones(n), np.ones(n)))
        assert res.p_coeffs == subset_coefficients(diag)

    def test_closure_and_closed_form(self, rng):
        for _ in range(100):
            n = rng.randint(1, 6)
            a = np.array([[rng.uniform(-1, 1) for _ in range(n)] for _ in range(n)])
            ss = StateSpace(a, np.ones(n), np.arange(n, dtype=float))
            res = leverrier(ss)
            closure = a @ res.f_matrices[-1] + res.p_coeffs[-1] * np.eye(n)
            assert np.abs(closure).max() <= n * 1e-9 * np.linalg.norm(a)
            alt = leverrier_closed_form_check(ss)
            assert np.allclose(res.p_coeffs, alt.p_coeffs, rtol=0, atol=1e-9)
            assert np.allclose(res.q_coeffs, alt.q_coeffs, rtol=0, atol=1e-9)

    def test_closed_form_fixture(self):
        alt = leverrier_closed_form_check(FIXTURE)
        assert alt.p_coeffs == pytest.approx([1, 3, 2], abs=1e-12)
        assert alt.q_coeffs == pytest.approx([0, 1], abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            StateSpace([[1, 2], [3, 4]], [1, 2, 3], [1, 0])
        with pytest.raises(DimensionMismatch):
            StateSpace([[1, 2, 3], [3, 4, 5]], [1, 2], [1, 0])

    def test_transfer_function_matches_resolvent(self, rng):
        n = 4
        a = np.array([[rng.uniform(-1, 1) for _ in range(n)] for _ in range(n)])
        b = np.array([rng.uniform(-1, 1) for _ in range(n)])
        c = np.array([rng.uniform(-1, 1) for _ in range(n)])
        tf = ss_to_tf(StateSpace(a, b, c))
        for s in (0.5j, 1 + 2j, -0.3 + 0.1j):
            direct = c @ np.linalg.solve(s * np.eye(n) - a, b)
            got = complex_horner(tf.numerator.alpha, s) / complex_horner(tf.denominator.alpha, s)
            assert got == pytest.approx(direct, rel=1e-9)


class TestBits:
    @pytest.mark.parametrize("rho, bits", [(117, "1110101"), (1, "1"), (64, "1000000")])
    def test_examples(self, rho, bits):
        assert "".join(map(str, to_bits(rho))) == bits

    def test_nonpositive(self):
        with pytest.raises(NonPositive):
            to_bits(0)

    @given(st.integers(1, 10 ** 12))
    def test_round_trip(self, rho):
        bits = to_bits(rho)
        assert bits[0] == 1
        assert int("".join(map(str, bits)), 2) == rho


class TestMatPow:
    def test_rho_one(self):
        a = np.array([[1.0, 2], [3, 4]])
        m, count = mat_pow_counted(a, 1)
        assert np.array_equal(m, a) and count == 0

    def test_identity_117(self):
        assert np.array_equal(mat_pow(np.eye(3), 117), np.eye(3))

    def test_shear(self):
        assert np.array_equal(mat_pow([[1, 1], [0, 1]], 5), [[1, 5], [0, 1]])

    def test_errors(self):
        with pytest.raises(NonPositive):
            mat_pow(np.eye(2), 0)
        with pytest.raises(DimensionMismatch):
            mat_pow(np.ones((2, 3)), 2)

    def test_against_repeated_product(self, rng):
        for n in (1, 2, 3, 5):
            a = np.array([[rng.uniform(-1, 1) for _ in range(n)] for _ in range(n)])
            a /= max(1.0, max(abs(np.linalg.eigvals(a))))
            for rho in range(1, 65):
                m, count = mat_pow_counted(a, rho)
                ref = np.array(repeated_power(a.tolist(), rho))
                assert np.abs(m - ref).max() <= 1e-9 * max(1.0, np.abs(ref).max())
                assert count <= 2 * (rho.bit_length() - 1)


def test_polyspec_interop():
    tf = ss_to_tf(FIXTURE)
    assert isinstance(tf.numerator, PolySpec)
