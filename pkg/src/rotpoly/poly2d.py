"""Two-variable polynomials ``p(s1, s2) = sum_lk P[l, k] s1^(n2-l) s2^(m2-k)``.

Rows of ``P`` index descending powers of ``s1``, columns descending powers
of ``s2``.  The general path runs the companion recursion down each column
in ``s1`` (giving ``f_k(s1) = alpha_k + j beta_k``), then two recursions in
``s2`` driven by the ``alpha_k`` and ``beta_k`` sequences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from .errors import PoleAtPoint, ZeroMatrix
from .freqresp import wrap_phase
from .horner1d import PolySpec, below_noise, eval_real
from .rotalgebra import ComplexPoint

__all__ = [
    "Poly2DSpec",
    "SeparableFactors",
    "Eval2DResult",
    "Response2D",
    "check_separable",
    "eval_separable",
    "eval2d",
    "response2d",
]


@dataclass(frozen=True)
class Poly2DSpec:
    coeffs: np.ndarray

    def __post_init__(self):
        p = np.atleast_2d(np.asarray(self.coeffs, dtype=float))
        if p.ndim != 2 or p.size == 0:
            raise ValueError("coefficient matrix must be a non-empty 2D array")
        if not np.isfinite(p).all():
            raise ValueError("coefficients must be finite")
        p.setflags(write=False)
        object.__setattr__(self, "coeffs", p)

    @property
    def n2(self) -> int:
        return self.coeffs.shape[0] - 1

    @property
    def m2(self) -> int:
        return self.coeffs.shape[1] - 1


@dataclass(frozen=True)
class SeparableFactors:
    eta: tuple[float, ...]   # s1 factor, descending powers
    rho: tuple[float, ...]   # s2 factor, descending powers

    def outer(self) -> np.ndarray:
        return np.outer(self.eta, self.rho)


@dataclass
class Eval2DResult:
    eta_p: float
    theta_p: float
    inner_parts: list[tuple[float, float]] = field(default_factory=list)

    def __complex__(self) -> complex:
        return complex(self.eta_p, self.theta_p)


@dataclass
class Response2D:
    magnitude: float
    phase: float
    re: float
    im: float


def _integer_factors(p: np.ndarray, i: int, k: int) -> SeparableFactors | None:
    if not np.all(p == np.round(p)) or np.abs(p).max() >= 2.0 ** 53:
        return None
    ints = p.astype(np.int64)
    row = ints[i]
    g = reduce(math.gcd, (abs(int(x)) for x in row))
    rho = row // g
    # entries of column k are exact multiples of rho[k] when P is rank one
    col = ints[:, k]
    if np.any(col % rho[k] != 0):
        return None
    eta = col // rho[k]
    return SeparableFactors(tuple(float(x) for x in eta), tuple(float(x) for x in rho))


def check_separable(p2d: Poly2DSpec, tol: float = 1e-9) -> SeparableFactors | None:
    """Rank-one factorization ``P = outer(eta, rho)`` or ``None``.

    ``rho`` is the pivot row of ``P`` (largest-magnitude entry) and ``eta``
    the pivot column divided by the pivot.  For integer matrices the row
    gcd is divided out of ``rho`` so both factors stay integral.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    p = p2d.coeffs
    if not p.any():
        raise ZeroMatrix("coefficient matrix is identically zero")
    i, k = np.unravel_index(np.argmax(np.abs(p)), p.shape)
    factors = _integer_factors(p, i, k)
    if factors is None:
        factors = SeparableFactors(tuple(p[:, k] / p[i, k]), tuple(p[i]))
    # compare in units of the pivot so tiny matrices do not underflow
    scale = abs(p[i, k])
    if np.linalg.norm((p - factors.outer()) / scale) > tol * np.linalg.norm(p / scale):
        return None
    return factors


def eval_separable(factors: SeparableFactors, s1: ComplexPoint,
                   s2: ComplexPoint) -> Eval2DResult:
    r1 = eval_real(PolySpec.real(factors.eta), s1)
    r2 = eval_real(PolySpec.real(factors.rho), s2)
    return Eval2DResult(r1.u * r2.u - r1.v * r2.v, r1.u * r2.v + r1.v * r2.u)


def _recur(values, x: float, y: float) -> tuple[float, float]:
    # companion recursion for s = x + jy, read off with T = [[-x, 1], [y, 0]] -> (Re, +Im)
    c, d = -(x * x + y * y), 2.0 * x
    w0 = w1 = 0.0
    for v in values:
        w0, w1 = w1, c * w0 + d * w1 + v
    return -x * w0 + w1, y * w0


def _horner(values, x: float) -> float:
    acc = 0.0
    for v in values:
        acc = acc * x + v
    return acc


def eval2d(p2d: Poly2DSpec, s1: ComplexPoint, s2: ComplexPoint) -> Eval2DResult:
    p = p2d.coeffs
    a1, b1, a2, b2 = s1.a, s1.b, s2.a, s2.b
    inner = []
    for k in range(p.shape[1]):
        col = p[:, k].tolist()
        if b1 == 0.0:
            inner.append((_horner(col, a1), 0.0))
        else:
            inner.append(_recur(col, a1, b1))
    alphas = [x for x, _ in inner]
    betas = [y for _, y in inner]
    if b2 == 0.0:
        return Eval2DResult(_horner(alphas, a2), _horner(betas, a2), inner)
    # T2 u = (Re fa, Im fa), T2 v = (Re fb, Im fb); J^T (x, y) = (-y, x)
    ua_re, ua_im = _recur(alphas, a2, b2)
    vb_re, vb_im = _recur(betas, a2, b2)
    return Eval2DResult(ua_re - vb_im, ua_im + vb_re, inner)


def response2d(q2d: Poly2DSpec, p2d: Poly2DSpec, s1: ComplexPoint,
               s2: ComplexPoint) -> Response2D:
    """``G = q/p`` at one point pair: magnitude ratio and phase difference."""
    q = eval2d(q2d, s1, s2)
    p = eval2d(p2d, s1, s2)
    den = p.eta_p * p.eta_p + p.theta_p * p.theta_p
    if den <= 0.0 or _is_root_2d(den, p2d, s1, s2):
        raise PoleAtPoint(f"denominator vanishes at ({complex(s1)}, {complex(s2)})")
    num = q.eta_p * q.eta_p + q.theta_p * q.theta_p
    magnitude = math.sqrt(num / den)
    phase = wrap_phase(math.atan2(q.theta_p, q.eta_p) - math.atan2(p.theta_p, p.eta_p))
    # q * conj(p) / |p|^2 keeps exact zeros that cos/sin of the phase would smear
    re = (q.eta_p * p.eta_p + q.theta_p * p.theta_p) / den
    im = (q.theta_p * p.eta_p - q.eta_p * p.theta_p) / den
    return Response2D(magnitude, phase, re, im)


def _is_root_2d(abs_sq: float, p2d: Poly2DSpec, s1: ComplexPoint,
                s2: ComplexPoint) -> bool:
    # sum |P_lk| |s1|^(n2-l) |s2|^(m2-k)
    r1, r2 = math.hypot(s1.a, s1.b), math.hypot(s2.a, s2.b)
    col_bounds = [_horner(col, r1) for col in np.abs(p2d.coeffs).T.tolist()]
    return below_noise(abs_sq, _horner(col_bounds, r2), p2d.n2 + p2d.m2)
