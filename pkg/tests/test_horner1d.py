import cmath
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import complex_derivative, complex_horner, rel_err
from rotpoly.errors import EvaluationAtRoot, RealAxisPoint
from rotpoly.horner1d import (
    OpCounter,
    PolySpec,
    abs_squared,
    conj_diff_imag,
    conj_sum,
    eval_complex,
    eval_derivative,
    eval_real,
    evaluate,
    horner_accumulate,
    reciprocal,
)
from rotpoly.rotalgebra import ComplexPoint

coef = st.floats(min_value=-1, max_value=1, allow_nan=False)
real_polys = st.lists(coef, min_size=1, max_size=13).map(PolySpec.real)
complex_polys = st.lists(st.tuples(coef, coef), min_size=1, max_size=13).map(
    lambda cs: PolySpec(tuple(c[0] for c in cs), tuple(c[1] for c in cs)))
any_poly = st.one_of(real_polys, complex_polys)
pts = st.builds(ComplexPoint, st.floats(-4, 4), st.floats(-4, 4))


def random_poly(rng, n, real):
    alpha = [rng.uniform(-1, 1) for _ in range(n + 1)]
    beta = [0.0] * (n + 1) if real else [rng.uniform(-1, 1) for _ in range(n + 1)]
    return PolySpec(tuple(alpha), tuple(beta))


def random_point(rng, radius=10.0):
    return ComplexPoint.from_complex(cmath.rect(radius * math.sqrt(rng.random()),
                                                rng.uniform(-math.pi, math.pi)))


class TestPolySpec:
    def test_lengths_must_match(self):
        with pytest.raises(ValueError):
            PolySpec((1.0, 2.0), (0.0,))

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            PolySpec.real([])

    def test_kind(self):
        assert PolySpec.real([1, 2]).is_real
        assert not PolySpec.from_complex([1j, 2]).is_real
        assert PolySpec.real([1, 2, 3]).n == 2


class TestAccumulate:
    def test_p_equals_s(self):
        assert horner_accumulate([1, 0], ComplexPoint(0, 2.5)) == (1.0, 0.0)

    def test_constant(self):
        assert horner_accumulate([4.2], ComplexPoint(0.3, -1.0)) == (0.0, 4.2)

    def test_root_of_s2_plus_1(self):
        z = horner_accumulate([1, 0, 1], ComplexPoint(0, 1))
        # T z with T = [[-a, 1], [-b, 0]]
        assert (-0.0 * z[0] + z[1], -1.0 * z[0]) == (0.0, 0.0)

    def test_real_axis_rejected(self):
        with pytest.raises(RealAxisPoint):
            horner_accumulate([1, 2], ComplexPoint(1, 0))

    def test_counter(self):
        c = OpCounter()
        horner_accumulate([1, 2, 3], ComplexPoint(1, 1), c)
        assert (c.mults, c.adds) == (3 + 2 * 3, 1 + 2 * 3)


class TestEval:
    def test_s_on_imag_axis(self):
        r = eval_real(PolySpec.real([1, 0]), ComplexPoint(0, 3))
        assert (r.u, r.v) == (0.0, 3.0)

    def test_constant(self):
        r = eval_real(PolySpec.real([7]), ComplexPoint(2, -5))
        assert (r.u, r.v) == (7.0, 0.0)

    def test_real_axis_root(self):
        r = eval_real(PolySpec.real([1, 3, 2]), ComplexPoint(-1, 0))
        assert (r.u, r.v) == (0.0, 0.0)
        assert r.z_alpha is None

    def test_eval_real_rejects_complex(self):
        with pytest.raises(ValueError):
            eval_real(PolySpec.from_complex([1j]), ComplexPoint(0, 1))

    def test_js_on_real_axis(self):
        r = eval_complex(PolySpec.from_complex([1j, 0]), ComplexPoint(1, 0))
        assert (r.u, r.v) == (0.0, 1.0)

    def test_complex_linear(self):
        r = eval_complex(PolySpec.from_complex([1 + 1j, 2]), ComplexPoint(1, 1))
        assert (r.u, r.v) == pytest.approx((2.0, 2.0), abs=1e-15)

    def test_complex_constant(self):
        r = eval_complex(PolySpec.from_complex([1 + 1j]), ComplexPoint(-3, 2))
        assert (r.u, r.v) == (1.0, 1.0)

    def test_real_kind_has_zero_beta_accumulator(self):
        r = eval_real(PolySpec.real([1, 2, 3]), ComplexPoint(0.5, 0.5))
        assert r.z_beta == (0.0, 0.0)

    def test_oracle_random_corpus(self, rng):
        for _ in range(500):
            n = rng.randint(0, 12)
            real = rng.random() < 0.5
            poly = random_poly(rng, n, real)
            s = random_point(rng)
            got = complex(evaluate(poly, s))
            ref = complex_horner(poly.coeffs(), complex(s))
            assert rel_err(got, ref, floor=1e-300) <= 1e-9

    @given(real_polys, pts)
    def test_conjugate_root_symmetry(self, poly, s):
        r1 = evaluate(poly, s)
        r2 = evaluate(poly, s.conj())
        scale = max(1.0, abs(complex(r1)))
        assert abs(r2.u - r1.u) <= 1e-12 * scale
        assert abs(r2.v + r1.v) <= 1e-12 * scale

    @given(any_poly, pts)
    def test_op_counts_depend_only_on_shape(self, poly, s):
        ones = PolySpec((1.0,) * (poly.n + 1),
                        (0.0,) * (poly.n + 1) if poly.is_real else (1.0,) * (poly.n + 1))
        probe = ComplexPoint(1.0, 1.0 if s.b != 0.0 else 0.0)
        assert evaluate(poly, s).ops == evaluate(ones, probe).ops


class TestDerivative:
    def test_s_squared(self):
        r = eval_derivative(PolySpec.real([1, 0, 0]), ComplexPoint(1, 1))
        assert (r.u, r.v) == pytest.approx((2, 2), abs=1e-15)

    def test_constant(self):
        r = eval_derivative(PolySpec.real([3.5]), ComplexPoint(1, 1))
        assert (r.u, r.v) == (0.0, 0.0)

    def test_s_cubed(self):
        r = eval_derivative(PolySpec.real([1, 0, 0, 0]), ComplexPoint(0, 1))
        assert (r.u, r.v) == pytest.approx((-3, 0), abs=1e-15)

    def test_complex_coefficients(self):
        poly = PolySpec.from_complex([2j, 1 - 1j, 3])
        got = complex(eval_derivative(poly, ComplexPoint(0.5, -2)))
        assert got == pytest.approx(complex_derivative(poly.coeffs(), 0.5 - 2j), abs=1e-13)

    def test_finite_difference(self, rng):
        h = 1e-6
        for _ in range(200):
            poly = random_poly(rng, rng.randint(1, 8), rng.random() < 0.5)
            s = random_point(rng, 2.0)
            z = complex(s)
            got = complex(eval_derivative(poly, s))
            p = lambda w: complex_horner(poly.coeffs(), w)  # noqa: E731
            fd_re = (p(z + h) - p(z - h)) / (2 * h)
            fd_im = (p(z + 1j * h) - p(z - 1j * h)) / (2j * h)
            scale = max(abs(got), 1.0)
            assert abs(got - fd_re) / scale <= 1e-5
            assert abs(got - fd_im) / scale <= 1e-5


class TestConjugateArithmetic:
    def test_abs_squared_s(self):
        assert abs_squared(PolySpec.real([1, 0]), ComplexPoint(0, 3)) == 9.0

    def test_abs_squared_constant(self):
        assert abs_squared(PolySpec.real([1]), ComplexPoint(2, 2)) == 1.0

    def test_abs_squared_real_axis(self):
        assert abs_squared(PolySpec.from_complex([1, 1j]), ComplexPoint(2, 0)) == 5.0

    def test_conj_of_s_at_j(self):
        poly = PolySpec.real([1, 0])
        assert conj_sum(poly, ComplexPoint(0, 1)) == 0.0
        assert conj_diff_imag(poly, ComplexPoint(0, 1)) == 2.0

    def test_conj_of_complex_constant(self):
        poly = PolySpec.from_complex([1 + 1j])
        assert conj_sum(poly, ComplexPoint(0.2, 0.3)) == 2.0
        assert conj_diff_imag(poly, ComplexPoint(0.2, 0.3)) == 2.0

    def test_conj_sum_real_point(self):
        poly = PolySpec.real([1, -2, 5])
        assert conj_sum(poly, ComplexPoint(3, 0)) == 2 * (9 - 6 + 5)

    @given(any_poly, pts)
    def test_quadratic_forms_match_parts(self, poly, s):
        r = evaluate(poly, s)
        scale = max(1.0, r.u * r.u + r.v * r.v)
        tol = 1e-9 * max(1.0, abs(complex(r)))
        assert abs(abs_squared(poly, s) - (r.u ** 2 + r.v ** 2)) <= 1e-9 * scale
        assert abs(conj_sum(poly, s) - 2 * r.u) <= 2 * tol
        assert abs(conj_diff_imag(poly, s) - 2 * r.v) <= 2 * tol

    def test_abs_squared_random_n6(self, rng):
        for _ in range(50):
            poly = random_poly(rng, 6, False)
            s = random_point(rng, 3.0)
            r = eval_complex(poly, s)
            ref = r.u * r.u + r.v * r.v
            assert abs(abs_squared(poly, s) - ref) <= 1e-9 * ref


class TestReciprocal:
    def test_one_over_j(self):
        r = reciprocal(PolySpec.real([1, 0]), ComplexPoint(0, 1))
        assert (r.a, r.b) == (0.0, -1.0)

    def test_constant(self):
        r = reciprocal(PolySpec.real([2]), ComplexPoint(5, 5))
        assert (r.a, r.b) == (0.5, 0.0)

    def test_root(self):
        with pytest.raises(EvaluationAtRoot):
            reciprocal(PolySpec.real([1, 0, 1]), ComplexPoint(0, 1))

    @given(any_poly, pts)
    def test_product_is_one(self, poly, s):
        p = complex(evaluate(poly, s))
        if abs(p) < 1e-6:
            return
        inv = complex(reciprocal(poly, s))
        assert abs(p * inv - 1) <= 1e-9

