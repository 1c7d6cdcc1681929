"""Relative error of the rotation-matrix evaluator against complex Horner in
extended precision (mpmath), as a function of degree.

    python3 scripts/accuracy_scan.py --trials 2000
"""

import argparse
import cmath
import math
import random

import mpmath

from rotpoly.horner1d import PolySpec, evaluate
from rotpoly.rotalgebra import ComplexPoint

mpmath.mp.dps = 40


def exact(coeffs, z):
    acc = mpmath.mpc(0)
    for c in coeffs:
        acc = acc * z + mpmath.mpc(c.real, c.imag)
    return acc


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=1000)
    ap.add_argument("--nmax", type=int, default=12)
    ap.add_argument("--radius", type=float, default=10.0)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    worst = {}
    for _ in range(args.trials):
        n = rng.randint(0, args.nmax)
        coeffs = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(n + 1)]
        z = cmath.rect(args.radius * math.sqrt(rng.random()), rng.uniform(-math.pi, math.pi))
        got = complex(evaluate(PolySpec.from_complex(coeffs), ComplexPoint.from_complex(z)))
        ref = exact(coeffs, mpmath.mpc(z.real, z.imag))
        if ref == 0:
            continue
        err = float(abs(mpmath.mpc(got.real, got.imag) - ref) / abs(ref))
        worst[n] = max(worst.get(n, 0.0), err)
    for n in sorted(worst):
        print(f"n={n:3d}  worst relative error {worst[n]:.3e}")


if __name__ == "__main__":
    main()
