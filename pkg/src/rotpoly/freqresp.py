"""Frequency response on the imaginary axis ``s = j*omega``.

At ``a = 0`` the companion matrix degenerates to ``[[0, 1], [-omega^2, 0]]``
so each recursion step is one multiplication and one addition.  Values are
read off with ``[[0, 1], [omega, 0]] z_alpha + [[-omega, 0], [0, 1]] z_beta``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import PoleOnGrid
from .horner1d import (
    EvalResult,
    OpCounter,
    PolySpec,
    _eval_on_real_axis,
    is_numerical_zero,
)
from .rotalgebra import ComplexPoint

__all__ = [
    "TransferFunctionSpec",
    "FrequencySample",
    "FrequencyGrid",
    "Sweep",
    "eval_jomega",
    "abs_squared_jomega",
    "response_at",
    "sweep",
    "predicted_ops",
    "baseline_ops",
    "conventional_eval",
    "wrap_phase",
]


def wrap_phase(x: float) -> float:
    """Map an angle to ``(-pi, pi]``; ``-pi`` goes to ``+pi``."""
    if -math.pi < x <= math.pi:
        return x
    y = math.fmod(x + math.pi, 2.0 * math.pi)
    if y <= 0.0:
        y += 2.0 * math.pi
    return y - math.pi


@dataclass(frozen=True)
class TransferFunctionSpec:
    numerator: PolySpec
    denominator: PolySpec
    gain: float = 1.0

    def __post_init__(self):
        if not any(self.denominator.alpha) and not any(self.denominator.beta):
            raise ValueError("denominator is identically zero")
        if not math.isfinite(self.gain):
            raise ValueError("gain must be finite")
        if self.numerator.n > self.denominator.n:
            warnings.warn("improper transfer function: deg(q) > deg(p)", stacklevel=3)


@dataclass(frozen=True)
class FrequencyGrid:
    omega_min: float
    omega_max: float
    points: int
    scale: str = "log"

    def __post_init__(self):
        if self.points < 1:
            raise ValueError("grid needs at least one point")
        if self.scale not in ("log", "linear"):
            raise ValueError(f"unknown scale {self.scale!r}")
        if not (math.isfinite(self.omega_min) and math.isfinite(self.omega_max)):
            raise ValueError("grid bounds must be finite")
        if self.omega_min > self.omega_max:
            raise ValueError("omega_min > omega_max")
        if self.scale == "log" and self.omega_min <= 0.0:
            raise ValueError("log grid needs omega_min > 0")

    def omegas(self) -> np.ndarray:
        if self.points == 1:
            return np.array([self.omega_min])
        if self.scale == "log":
            return np.geomspace(self.omega_min, self.omega_max, self.points)
        return np.linspace(self.omega_min, self.omega_max, self.points)


@dataclass
class FrequencySample:
    """One point of ``H(j omega)``; magnitude in absolute units, phase in radians.

    When ``pole`` is set the dependent fields are NaN.
    """

    omega: float
    u_q: float
    v_q: float
    u_p: float
    v_p: float
    magnitude: float
    phase: float
    re_h: float
    im_h: float
    pole: bool = False
    ops: OpCounter = field(default_factory=OpCounter)


@dataclass
class Sweep:
    samples: list[FrequencySample]
    ops: OpCounter

    def __iter__(self) -> Iterator[FrequencySample]:
        return iter(self.samples)

    def __len__(self) -> int:
        return len(self.samples)

    def __getitem__(self, i):
        return self.samples[i]


def _jomega_accumulate(coeffs: Sequence[float], w2: float, counter: OpCounter):
    z0 = z1 = 0.0
    for coef in coeffs:
        z0, z1 = z1, coef - w2 * z0
    counter.mul(len(coeffs))
    counter.add(len(coeffs))
    return z0, z1


def eval_jomega(poly: PolySpec, omega: float) -> EvalResult:
    omega = float(omega)
    if omega == 0.0:
        return _eval_on_real_axis(poly, 0.0)
    ops = OpCounter()
    w2 = omega * omega
    ops.mul()
    za = _jomega_accumulate(poly.alpha, w2, ops)
    if poly.is_real:
        ops.mul()
        return EvalResult(za[1], omega * za[0], za, (0.0, 0.0), ops)
    zb = _jomega_accumulate(poly.beta, w2, ops)
    u = za[1] - omega * zb[0]
    v = omega * za[0] + zb[1]
    ops.mul(2)
    ops.add(2)
    return EvalResult(u, v, za, zb, ops)


def abs_squared_jomega(poly: PolySpec, omega: float) -> float:
    """``|p(j omega)|**2`` from the 4x4 (or reduced 2x2) quadratic form."""
    res = eval_jomega(poly, omega)
    if res.z_alpha is None:
        return res.u * res.u + res.v * res.v
    w = float(omega)
    x0, x1 = res.z_alpha
    total = w * w * x0 * x0 + x1 * x1
    if not poly.is_real:
        y0, y1 = res.z_beta
        total += w * w * y0 * y0 + y1 * y1 + 2.0 * w * (x0 * y1 - x1 * y0)
    return max(total, 0.0)


def response_at(tf: TransferFunctionSpec, omega: float) -> FrequencySample:
    """``H(j omega)``; raises :class:`PoleOnGrid` if the denominator vanishes."""
    omega = float(omega)
    q = eval_jomega(tf.numerator, omega)
    p = eval_jomega(tf.denominator, omega)
    ops = q.ops + p.ops
    den = p.u * p.u + p.v * p.v
    if is_numerical_zero(den, tf.denominator, ComplexPoint(0.0, omega)):
        raise PoleOnGrid(f"denominator vanishes at omega={omega!r}")
    num = q.u * q.u + q.v * q.v
    k = tf.gain
    magnitude = abs(k) * math.sqrt(num / den)
    # arg(q p*): full-quadrant version of the single-arctangent phase
    cross = p.u * q.v - q.u * p.v
    dot = p.u * q.u + q.v * p.v
    phase = math.atan2(cross, dot)
    if k < 0.0:
        phase += math.pi
    phase = wrap_phase(phase)
    re_h = k * dot / den
    im_h = k * cross / den
    # num, den, ratio, gain, cross, dot, re_h, im_h; divisions tallied as mults
    ops.mul(14)
    ops.add(4)
    return FrequencySample(omega, q.u, q.v, p.u, p.v, magnitude, phase,
                           re_h, im_h, False, ops)


def _pole_sample(tf: TransferFunctionSpec, omega: float) -> FrequencySample:
    q = eval_jomega(tf.numerator, omega)
    p = eval_jomega(tf.denominator, omega)
    nan = math.nan
    return FrequencySample(omega, q.u, q.v, p.u, p.v, nan, nan, nan, nan,
                           True, q.ops + p.ops)


def sweep(tf: TransferFunctionSpec, grid: FrequencyGrid) -> Sweep:
    samples = []
    total = OpCounter()
    for omega in grid.omegas():
        try:
            s = response_at(tf, float(omega))
        except PoleOnGrid:
            s = _pole_sample(tf, float(omega))
        total += s.ops
        samples.append(s)
    return Sweep(samples, total)


def predicted_ops(n: int, kind: str = "complex") -> OpCounter:
    """Claimed per-frequency cost of the companion method: 2(n+4) mults, 2(n+1) adds.

    Only one formula is given for the method, so ``kind`` is accepted
    for symmetry with the measured counters and does not change the result.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if kind not in ("real", "complex"):
        raise ValueError(f"unknown kind {kind!r}")
    return OpCounter(2 * (n + 4), 2 * (n + 1))


def baseline_ops(n: int) -> OpCounter:
    """Claimed cost of the conventional method: 6(n+1)+2 mults, 2(n+1) adds."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return OpCounter(6 * (n + 1) + 2, 2 * (n + 1))


def _cmul(x: complex, y: complex, counter: OpCounter) -> complex:
    counter.mul(4)
    counter.add(2)
    return complex(x.real * y.real - x.imag * y.imag,
                   x.real * y.imag + x.imag * y.real)


def conventional_eval(poly: PolySpec, omega: float) -> EvalResult:
    """Reference evaluation by direct substitution of ``s = j omega``.

    Builds each power ``s**k`` by complex multiplication (4 mults, 2 adds
    each, starting from ``s**0 = 1``), scales it by its coefficient
    (2 mults for a real coefficient, a full complex multiply otherwise)
    and accumulates.  No structural zeros are skipped.
    """
    ops = OpCounter()
    s = complex(0.0, float(omega))
    power = complex(1.0, 0.0)
    acc = complex(0.0, 0.0)
    coeffs = poly.coeffs()
    real = poly.is_real
    for k, gamma in enumerate(reversed(coeffs)):
        if k > 0:
            power = _cmul(power, s, ops)
        if real:
            term = complex(gamma.real * power.real, gamma.real * power.imag)
            ops.mul(2)
        else:
            term = _cmul(gamma, power, ops)
        acc = complex(acc.real + term.real, acc.imag + term.imag)
        ops.add(2)
    return EvalResult(acc.real, acc.imag, None, None, ops)
