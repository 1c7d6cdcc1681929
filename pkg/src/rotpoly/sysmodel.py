"""Transfer functions from time constants and state space; matrix powers."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NonPositive
from .freqresp import TransferFunctionSpec
from .horner1d import PolySpec

__all__ = [
    "TimeConstantForm",
    "StateSpace",
    "LeverrierResult",
    "expand_roots",
    "root_coefficient",
    "tc_to_tf",
    "leverrier",
    "leverrier_closed_form_check",
    "ss_to_tf",
    "to_bits",
    "mat_pow",
    "mat_pow_counted",
]


@dataclass(frozen=True)
class TimeConstantForm:
    """``G(s) = prod(1 + Tn s) / prod(1 + Td s)``."""

    numerator_tcs: tuple[float, ...]
    denominator_tcs: tuple[float, ...]

    def __post_init__(self):
        num = tuple(float(t) for t in self.numerator_tcs)
        den = tuple(float(t) for t in self.denominator_tcs)
        for t in num + den:
            if not (math.isfinite(t) and t > 0.0):
                raise ValueError(f"time constants must be positive, got {t!r}")
        if len(num) > len(den):
            warnings.warn("more numerator than denominator factors", stacklevel=3)
        object.__setattr__(self, "numerator_tcs", num)
        object.__setattr__(self, "denominator_tcs", den)


@dataclass(frozen=True)
class StateSpace:
    """SISO ``x' = A x + B u``, ``y = C x``."""

    a_matrix: np.ndarray
    b_vector: np.ndarray
    c_vector: np.ndarray

    def __post_init__(self):
        a = np.atleast_2d(np.asarray(self.a_matrix, dtype=float))
        b = np.asarray(self.b_vector, dtype=float).reshape(-1)
        c = np.asarray(self.c_vector, dtype=float).reshape(-1)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise DimensionMismatch(f"A must be square, got shape {a.shape}")
        n = a.shape[0]
        if b.shape != (n,) or c.shape != (n,):
            raise DimensionMismatch(
                f"B and C must have {n} entries, got {b.size} and {c.size}")
        if not (np.isfinite(a).all() and np.isfinite(b).all() and np.isfinite(c).all()):
            raise ValueError("state-space entries must be finite")
        object.__setattr__(self, "a_matrix", a)
        object.__setattr__(self, "b_vector", b)
        object.__setattr__(self, "c_vector", c)

    @property
    def n(self) -> int:
        return self.a_matrix.shape[0]


@dataclass
class LeverrierResult:
    p_coeffs: list[float]        # p_0 .. p_n, p_0 = 1
    q_coeffs: list[float]        # q_1 .. q_n, multiplying s^(n-1) .. s^0
    f_matrices: list[np.ndarray]  # F_1 .. F_n


def expand_roots(roots: Sequence[float]) -> list[float]:
    """Coefficients ``[c_0, ..., c_n]`` of ``prod(s - r)``, descending powers.

    ``c_f = (-1)**f * e_f(roots)``.  Built one linear factor at a time.
    """
    coeffs = [1.0]
    for r in roots:
        nxt = coeffs + [0.0]
        for i in range(1, len(nxt)):
            nxt[i] -= r * coeffs[i - 1]
        coeffs = nxt
    return coeffs


def root_coefficient(roots: Sequence[float], f: int) -> float:
    if not 0 <= f <= len(roots):
        raise ValueError(f"f must lie in [0, {len(roots)}]")
    return expand_roots(roots)[f]


def tc_to_tf(form: TimeConstantForm) -> TransferFunctionSpec:
    """Monic numerator/denominator with ``K = prod(Tn) / prod(Td)`` factored out."""
    num_roots = [-1.0 / t for t in form.numerator_tcs]
    den_roots = [-1.0 / t for t in form.denominator_tcs]
    gain = math.prod(form.numerator_tcs) / math.prod(form.denominator_tcs)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return TransferFunctionSpec(
            PolySpec.real(expand_roots(num_roots)),
            PolySpec.real(expand_roots(den_roots)),
            gain,
        )


def leverrier(ss: StateSpace) -> LeverrierResult:
    """Faddeev-LeVerrier: ``p_l = -tr(A F_l)/l``, ``F_{l+1} = A F_l + p_l I``.

    Numerically fragile for large ``n``; intended for n <= 20.
    """
    a = ss.a_matrix
    n = ss.n
    eye = np.eye(n)
    f = eye.copy()
    ps = [1.0]
    fs = []
    for l in range(1, n + 1):
        fs.append(f)
        af = a @ f
        p = -np.trace(af) / l
        ps.append(float(p))
        f = af + p * eye
    qs = [float(ss.c_vector @ fk @ ss.b_vector) for fk in fs]
    return LeverrierResult(ps, qs, fs)


def leverrier_closed_form_check(ss: StateSpace) -> LeverrierResult:
    """Same output as :func:`leverrier` from the power-sum forms.

    ``F_k = sum_{l<k} p_l A^(k-l-1)`` and ``p_k = -(1/k) sum_{l<k} p_l tr(A^(k-l))``.
    """
    a = ss.a_matrix
    n = ss.n
    powers = [np.eye(n)]
    for _ in range(n):
        powers.append(powers[-1] @ a)
    traces = [float(np.trace(m)) for m in powers]
    ps = [1.0]
    for k in range(1, n + 1):
        ps.append(-sum(ps[l] * traces[k - l] for l in range(k)) / k)
    fs = [sum(ps[l] * powers[k - l - 1] for l in range(k)) for k in range(1, n + 1)]
    qs = [float(ss.c_vector @ fk @ ss.b_vector) for fk in fs]
    return LeverrierResult(ps, qs, fs)


def _strip_leading_zeros(coeffs: list[float]) -> list[float]:
    i = 0
    while i < len(coeffs) - 1 and coeffs[i] == 0.0:
        i += 1
    return coeffs[i:]


def ss_to_tf(ss: StateSpace) -> TransferFunctionSpec:
    res = leverrier(ss)
    num = _strip_leading_zeros(res.q_coeffs) if res.q_coeffs else [0.0]
    return TransferFunctionSpec(PolySpec.real(num), PolySpec.real(res.p_coeffs))


def to_bits(rho: int) -> list[int]:
    """Binary digits of ``rho``, most significant first."""
    if int(rho) != rho:
        raise TypeError("rho must be an integer")
    rho = int(rho)
    if rho < 1:
        raise NonPositive(f"rho must be >= 1, got {rho}")
    return [int(ch) for ch in bin(rho)[2:]]


def mat_pow_counted(a, rho: int) -> tuple[np.ndarray, int]:
    """Left-to-right square-and-multiply; returns ``(A**rho, n_matmuls)``."""
    a = np.atleast_2d(np.asarray(a, dtype=float))
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"matrix must be square, got shape {a.shape}")
    bits = to_bits(rho)
    m = a.copy()
    count = 0
    for bit in bits[1:]:
        m = m @ m
        count += 1
        if bit:
            m = m @ a
            count += 1
    return m, count


def mat_pow(a, rho: int) -> np.ndarray:
    return mat_pow_counted(a, rho)[0]
