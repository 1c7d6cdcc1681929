"""Complex numbers as 2x2 real rotation matrices.

A point ``s = a + jb`` corresponds to ``R = a*I + b*J`` with
``J = [[0, 1], [-1, 0]]``.  Everything here works on the two scalars
``(a, b)``; the four matrix entries are derived on demand.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DivisionByZeroRotation, RealAxisPoint

__all__ = [
    "ComplexPoint",
    "RotationForm",
    "Mat2",
    "CompanionPair",
    "I2",
    "J2",
    "embed",
    "j_power",
    "rot_power",
    "field_op",
    "companion",
]


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite component: {v!r}")


@dataclass(frozen=True)
class ComplexPoint:
    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "b", float(self.b))
        _check_finite(self.a, self.b)

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexPoint":
        z = complex(z)
        return cls(z.real, z.imag)

    def __complex__(self) -> complex:
        return complex(self.a, self.b)

    def conj(self) -> "ComplexPoint":
        return ComplexPoint(self.a, -self.b)


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 real matrix."""

    m00: float
    m01: float
    m10: float
    m11: float

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.m00 * other.m00 + self.m01 * other.m10,
                self.m00 * other.m01 + self.m01 * other.m11,
                self.m10 * other.m00 + self.m11 * other.m10,
                self.m10 * other.m01 + self.m11 * other.m11,
            )
        x, y = other
        return (self.m00 * x + self.m01 * y, self.m10 * x + self.m11 * y)

    def __add__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.m00 + other.m00, self.m01 + other.m01,
                    self.m10 + other.m10, self.m11 + other.m11)

    def __sub__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.m00 - other.m00, self.m01 - other.m01,
                    self.m10 - other.m10, self.m11 - other.m11)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.m00, -self.m01, -self.m10, -self.m11)

    def scale(self, c: float) -> "Mat2":
        return Mat2(c * self.m00, c * self.m01, c * self.m10, c * self.m11)

    @property
    def T(self) -> "Mat2":
        return Mat2(self.m00, self.m10, self.m01, self.m11)

    def det(self) -> float:
        return self.m00 * self.m11 - self.m01 * self.m10

    def rows(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return ((self.m00, self.m01), (self.m10, self.m11))


I2 = Mat2(1.0, 0.0, 0.0, 1.0)
J2 = Mat2(0.0, 1.0, -1.0, 0.0)


@dataclass(frozen=True)
class RotationForm:
    """``R = a*I + b*J``; only the two scalars are stored."""

    a: float
    b: float

    @property
    def matrix(self) -> Mat2:
        return Mat2(self.a, self.b, -self.b, self.a)

    @property
    def modulus_sq(self) -> float:
        return self.a * self.a + self.b * self.b

    def to_point(self) -> ComplexPoint:
        return ComplexPoint(self.a, self.b)

    def __complex__(self) -> complex:
        return complex(self.a, self.b)


@dataclass(frozen=True)
class CompanionPair:
    """Companion matrix ``rc = T^-1 R T`` and the similarity ``t``."""

    rc: Mat2
    t: Mat2


def embed(s: ComplexPoint) -> RotationForm:
    return RotationForm(s.a, s.b)


_J_CYCLE = (I2, J2, -I2, -J2)


def j_power(k: int) -> Mat2:
    """``J**k``; period four since ``J @ J = -I``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _J_CYCLE[k % 4]


def rot_power(r: RotationForm, k: int) -> RotationForm:
    """``R**k`` from the spectral split ``R = l1*E1 + l2*E2``.

    With conjugate eigenvalues ``l1 = a + jb = rho*exp(j*theta)`` the
    projector sum collapses to ``Re(l1**k) I + Im(l1**k) J``, i.e.
    ``rho**k * (cos(k theta) I + sin(k theta) J)``.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return RotationForm(1.0, 0.0)
    if k == 1:
        return r
    rho = math.hypot(r.a, r.b)
    if rho == 0.0:
        return RotationForm(0.0, 0.0)
    theta = math.atan2(r.b, r.a)
    mag = rho ** k
    return RotationForm(mag * math.cos(k * theta), mag * math.sin(k * theta))


def field_op(r1: RotationForm, r2: RotationForm, op: str) -> RotationForm:
    a1, b1, a2, b2 = r1.a, r1.b, r2.a, r2.b
    if op == "add":
        return RotationForm(a1 + a2, b1 + b2)
    if op == "sub":
        return RotationForm(a1 - a2, b1 - b2)
    if op == "mul":
        return RotationForm(a1 * a2 - b1 * b2, a2 * b1 + a1 * b2)
    if op == "div":
        d = a2 * a2 + b2 * b2
        if d == 0.0:
            raise DivisionByZeroRotation("division by the zero rotation")
        # R1 R2^-1 with R2^-1 = R2^T / (a2^2 + b2^2)
        return RotationForm((a1 * a2 + b1 * b2) / d, (a2 * b1 - a1 * b2) / d)
    raise ValueError(f"unknown op {op!r}")


def companion(s: ComplexPoint) -> CompanionPair:
    if s.b == 0.0:
        raise RealAxisPoint(f"companion form undefined for real point a={s.a}")
    a, b = s.a, s.b
    rc = Mat2(0.0, 1.0, -(a * a + b * b), 2.0 * a)
    t = Mat2(-a, 1.0, -b, 0.0)
    return CompanionPair(rc, t)
