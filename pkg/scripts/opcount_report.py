"""Measured operation counts of the j-omega evaluator against the closed-form
claim and an instrumented power-sum baseline.

    python3 scripts/opcount_report.py --nmax 64 --kind complex
"""

import argparse

from rotpoly.cli import OPCOUNT_HEADER, opcount_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmin", type=int, default=0)
    ap.add_argument("--nmax", type=int, default=16)
    ap.add_argument("--kind", choices=("real", "complex"), default="complex")
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    rows = opcount_rows(args.nmin, args.nmax, args.kind, args.seed)
    widths = [max(len(h), 5) for h in OPCOUNT_HEADER]
    print("  ".join(h.rjust(w) for h, w in zip(OPCOUNT_HEADER, widths)))
    for row in rows:
        print("  ".join(str(x).rjust(w) for x, w in zip(row, widths)))

    n = [r[0] for r in rows]
    over = [k for k, r in zip(n, rows) if r[1] > r[3]]
    ratio = [r[7] / r[1] for r in rows if r[0] >= 2]
    print()
    print(f"rows above predicted multiplications: {over or 'none'}")
    if ratio:
        print(f"conventional / matrix multiplications, n>=2: "
              f"min {min(ratio):.2f}, max {max(ratio):.2f}")


if __name__ == "__main__":
    main()
