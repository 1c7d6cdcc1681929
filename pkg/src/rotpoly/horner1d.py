"""Polynomial evaluation at a complex point with real arithmetic only.

Coefficients are stored in DESCENDING power order: ``alpha[0]`` multiplies
``s**n`` and ``alpha[-1]`` is the constant term.  This is the opposite of
``numpy.polynomial`` and matches ``numpy.polyval``.

For ``s = a + jb`` with ``b != 0`` the evaluation runs the companion
recursion

    z[l+1] = Rc @ z[l] + coef[l] * w,   z[0] = 0,  w = (0, 1)

with ``Rc = [[0, 1], [-(a^2+b^2), 2a]]``, then reads the value off
``T @ z[n+1] = (Re p, -Im p)``.  Each step costs two multiplications,
independent of whether the coefficients are real or complex.  Points on
the real axis (``b == 0``) use ordinary scalar Horner instead.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass, field
from typing import Sequence

from .errors import DegreeZero, EvaluationAtRoot, RealAxisPoint
from .rotalgebra import ComplexPoint

__all__ = [
    "OpCounter",
    "PolySpec",
    "EvalResult",
    "horner_accumulate",
    "eval_real",
    "eval_complex",
    "evaluate",
    "eval_derivative",
    "abs_squared",
    "conj_sum",
    "conj_diff_imag",
    "reciprocal",
    "value_bound",
    "is_numerical_zero",
    "below_noise",
]

Vec2 = tuple[float, float]

_EPS = sys.float_info.epsilon
_TINY = sys.float_info.min


@dataclass
class OpCounter:
    """Tally of real multiplications and additions/subtractions executed."""

    mults: int = 0
    adds: int = 0

    def mul(self, k: int = 1) -> None:
        self.mults += k

    def add(self, k: int = 1) -> None:
        self.adds += k

    def __add__(self, other: "OpCounter") -> "OpCounter":
        return OpCounter(self.mults + other.mults, self.adds + other.adds)

    def __iadd__(self, other: "OpCounter") -> "OpCounter":
        self.mults += other.mults
        self.adds += other.adds
        return self


@dataclass(frozen=True)
class PolySpec:
    """``p(s) = sum_l (alpha[l] + j beta[l]) s**(n-l)``, descending powers."""

    alpha: tuple[float, ...]
    beta: tuple[float, ...]

    def __post_init__(self):
        alpha = tuple(float(c) for c in self.alpha)
        beta = tuple(float(c) for c in self.beta)
        if len(alpha) == 0:
            raise ValueError("polynomial needs at least one coefficient")
        if len(alpha) != len(beta):
            raise ValueError("alpha and beta must have equal length")
        if not all(math.isfinite(c) for c in alpha + beta):
            raise ValueError("coefficients must be finite")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)

    @classmethod
    def real(cls, coeffs: Sequence[float]) -> "PolySpec":
        coeffs = tuple(coeffs)
        return cls(coeffs, (0.0,) * len(coeffs))

    @classmethod
    def from_complex(cls, coeffs: Sequence[complex]) -> "PolySpec":
        cs = [complex(c) for c in coeffs]
        return cls(tuple(c.real for c in cs), tuple(c.imag for c in cs))

    @property
    def n(self) -> int:
        return len(self.alpha) - 1

    @property
    def is_real(self) -> bool:
        return not any(self.beta)

    def coeffs(self) -> list[complex]:
        return [complex(x, y) for x, y in zip(self.alpha, self.beta)]


@dataclass
class EvalResult:
    """Value ``u + jv`` plus the final companion accumulators.

    ``z_alpha``/``z_beta`` are ``None`` when the point is on the real axis,
    since no companion recursion runs there.
    """

    u: float
    v: float
    z_alpha: Vec2 | None
    z_beta: Vec2 | None
    ops: OpCounter = field(default_factory=OpCounter)

    def __complex__(self) -> complex:
        return complex(self.u, self.v)


def _companion_entries(point: ComplexPoint, counter: OpCounter) -> tuple[float, float]:
    a, b = point.a, point.b
    a2 = a * a
    b2 = b * b
    two_a = 2.0 * a
    counter.mul(3)
    counter.add(1)
    return -(a2 + b2), two_a


def _run(coeffs: Sequence[float], c: float, d: float, counter: OpCounter) -> Vec2:
    # Rc z = (z1, c*z0 + d*z1); then + coef in the second slot
    z0 = z1 = 0.0
    for coef in coeffs:
        z0, z1 = z1, c * z0 + d * z1 + coef
    counter.mul(2 * len(coeffs))
    counter.add(2 * len(coeffs))
    return z0, z1


def horner_accumulate(coeffs: Sequence[float], point: ComplexPoint,
                      counter: OpCounter | None = None) -> Vec2:
    """Run the companion recursion to ``z[n+1]`` for real ``coeffs``."""
    if point.b == 0.0:
        raise RealAxisPoint("companion recursion needs b != 0")
    if len(coeffs) == 0:
        raise ValueError("empty coefficient list")
    counter = counter if counter is not None else OpCounter()
    c, d = _companion_entries(point, counter)
    return _run(coeffs, c, d, counter)


def _extract(z: Vec2, point: ComplexPoint, counter: OpCounter) -> Vec2:
    # T z = (-a z0 + z1, -b z0) = (Re, -Im)
    counter.mul(2)
    counter.add(1)
    return -point.a * z[0] + z[1], point.b * z[0]


def _scalar_horner(coeffs: Sequence[float], x: float, counter: OpCounter) -> float:
    acc = 0.0
    for coef in coeffs:
        acc = acc * x + coef
    counter.mul(len(coeffs))
    counter.add(len(coeffs))
    return acc


def _eval_on_real_axis(poly: PolySpec, x: float) -> EvalResult:
    ops = OpCounter()
    u = _scalar_horner(poly.alpha, x, ops)
    v = _scalar_horner(poly.beta, x, ops) if not poly.is_real else 0.0
    return EvalResult(u, v, None, None, ops)


def eval_real(poly: PolySpec, point: ComplexPoint) -> EvalResult:
    """Evaluate a real-coefficient polynomial; ``beta`` must be all zero."""
    if not poly.is_real:
        raise ValueError("eval_real needs a real-coefficient polynomial")
    if point.b == 0.0:
        return _eval_on_real_axis(poly, point.a)
    ops = OpCounter()
    z = horner_accumulate(poly.alpha, point, ops)
    u, v = _extract(z, point, ops)
    return EvalResult(u, v, z, (0.0, 0.0), ops)


def eval_complex(poly: PolySpec, point: ComplexPoint) -> EvalResult:
    """Evaluate with complex coefficients: two accumulations, one ``Rc``.

    ``(u, v) = U T z_alpha + G T z_beta``, i.e. ``u = u_a - v_b`` and
    ``v = v_a + u_b``.
    """
    if point.b == 0.0:
        return _eval_on_real_axis(poly, point.a)
    ops = OpCounter()
    c, d = _companion_entries(point, ops)
    za = _run(poly.alpha, c, d, ops)
    zb = _run(poly.beta, c, d, ops)
    ua, va = _extract(za, point, ops)
    ub, vb = _extract(zb, point, ops)
    ops.add(2)
    return EvalResult(ua - vb, va + ub, za, zb, ops)


def evaluate(poly: PolySpec, point: ComplexPoint) -> EvalResult:
    """Dispatch to :func:`eval_real` or :func:`eval_complex` by coefficient kind."""
    return eval_real(poly, point) if poly.is_real else eval_complex(poly, point)


def _derivative_poly(poly: PolySpec, counter: OpCounter) -> PolySpec:
    n = poly.n
    if n == 0:
        raise DegreeZero("derivative recursion needs n >= 1")
    alpha = tuple((n - l) * poly.alpha[l] for l in range(n))
    beta = tuple((n - l) * poly.beta[l] for l in range(n))
    counter.mul(n if poly.is_real else 2 * n)
    return PolySpec(alpha, beta)


def eval_derivative(poly: PolySpec, point: ComplexPoint) -> EvalResult:
    """``p'(s)`` via the recursion on ``nu[l] = (n - l) * coef[l]``, n steps."""
    scale_ops = OpCounter()
    try:
        dpoly = _derivative_poly(poly, scale_ops)
    except DegreeZero:
        return EvalResult(0.0, 0.0, None, None, OpCounter())
    res = evaluate(dpoly, point)
    res.ops += scale_ops
    return res


def _accumulators(poly: PolySpec, point: ComplexPoint) -> tuple[Vec2, Vec2]:
    res = evaluate(poly, point)
    return res.z_alpha, res.z_beta


def _quad(z: Vec2, a: float, m: float) -> float:
    # z^T [[m, -a], [-a, 1]] z
    return m * z[0] * z[0] - 2.0 * a * z[0] * z[1] + z[1] * z[1]


def abs_squared(poly: PolySpec, point: ComplexPoint) -> float:
    """``|p(s)|**2`` as the quadratic form ``[za; zb]^T [[A, B], [-B, A]] [za; zb]``.

    ``A = [[a^2+b^2, -a], [-a, 1]]``, ``B = [[0, b], [-b, 0]]``.
    """
    if point.b == 0.0:
        r = _eval_on_real_axis(poly, point.a)
        return r.u * r.u + r.v * r.v
    a, b = point.a, point.b
    m = a * a + b * b
    za, zb = _accumulators(poly, point)
    total = _quad(za, a, m)
    if not poly.is_real:
        # cross blocks: za^T B zb - zb^T B za = 2 za^T B zb
        total += _quad(zb, a, m) + 2.0 * b * (za[0] * zb[1] - za[1] * zb[0])
    return max(total, 0.0)


def conj_sum(poly: PolySpec, point: ComplexPoint) -> float:
    """``p + p*`` = ``2 [0 1] (A za + B zb)`` = ``2 u``."""
    if point.b == 0.0:
        return 2.0 * _eval_on_real_axis(poly, point.a).u
    a, b = point.a, point.b
    za, zb = _accumulators(poly, point)
    return 2.0 * ((-a * za[0] + za[1]) - b * zb[0])


def conj_diff_imag(poly: PolySpec, point: ComplexPoint) -> float:
    """``d`` with ``p - p* = j d``; equals ``2 [0 1] (-B za + A zb)`` = ``2 v``."""
    if point.b == 0.0:
        return 2.0 * _eval_on_real_axis(poly, point.a).v
    a, b = point.a, point.b
    za, zb = _accumulators(poly, point)
    return 2.0 * (b * za[0] + (-a * zb[0] + zb[1]))


def value_bound(poly: PolySpec, point: ComplexPoint) -> float:
    """``sum |gamma_l| |s|**(n-l)``, the natural scale of ``p(s)``."""
    r = math.hypot(point.a, point.b)
    acc = 0.0
    for x, y in zip(poly.alpha, poly.beta):
        acc = acc * r + math.hypot(x, y)
    return acc


def below_noise(abs_sq: float, bound: float, degree: int) -> bool:
    """True when ``|p|**2`` is under the rounding noise of a degree-``degree``
    evaluation whose terms sum in magnitude to ``bound``."""
    if abs_sq <= _TINY:
        return True
    tol = 8.0 * (degree + 1) * _EPS * bound
    return abs_sq <= tol * tol


def is_numerical_zero(abs_sq: float, poly: PolySpec, point: ComplexPoint) -> bool:
    return below_noise(abs_sq, value_bound(poly, point), poly.n)


def reciprocal(poly: PolySpec, point: ComplexPoint) -> ComplexPoint:
    """``1/p = p* / |p|**2``."""
    res = evaluate(poly, point)
    m = res.u * res.u + res.v * res.v
    if is_numerical_zero(m, poly, point):
        raise EvaluationAtRoot(f"p vanishes at {complex(point)}")
    return ComplexPoint(res.u / m, -res.v / m)
