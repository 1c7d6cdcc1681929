"""Bode and Nyquist data for a few textbook systems, optionally plotted.

    python3 scripts/bode_demo.py              # print a short table
    python3 scripts/bode_demo.py --plot out.png
"""

import argparse
import math

import numpy as np

from rotpoly import FrequencyGrid, StateSpace, TimeConstantForm, sweep, tc_to_tf
from rotpoly.freqresp import TransferFunctionSpec
from rotpoly.horner1d import PolySpec
from rotpoly.sysmodel import ss_to_tf


def systems():
    yield "lag 1/(1+s)", tc_to_tf(TimeConstantForm((), (1.0,)))
    yield "lead-lag (1+2s)/((1+0.1s)(1+10s))", tc_to_tf(TimeConstantForm((2.0,), (0.1, 10.0)))
    yield "oscillator, zeta=0.1", TransferFunctionSpec(PolySpec.real([1]),
                                                       PolySpec.real([1, 0.2, 1]))
    yield "state space [[0,1],[-2,-3]]", ss_to_tf(
        StateSpace([[0, 1], [-2, -3]], [0, 1], [1, 0]))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200)
    ap.add_argument("--plot", metavar="PNG", help="write Bode/Nyquist figure (needs matplotlib)")
    args = ap.parse_args()
    grid = FrequencyGrid(1e-2, 1e2, args.points)

    results = [(name, sweep(tf, grid)) for name, tf in systems()]
    for name, res in results:
        mags = np.array([s.magnitude for s in res])
        k = int(np.argmax(mags))
        print(f"{name:40s} peak |H| = {mags[k]:.4f} at w = {res.samples[k].omega:.4g}, "
              f"{res.ops.mults} mults over {len(res.samples)} points")

    if args.plot:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt

        fig, (ax_m, ax_p, ax_n) = plt.subplots(1, 3, figsize=(15, 4))
        for name, res in results:
            w = [s.omega for s in res]
            ax_m.semilogx(w, [20 * math.log10(s.magnitude) for s in res], label=name)
            ax_p.semilogx(w, [math.degrees(s.phase) for s in res])
            ax_n.plot([s.re_h for s in res], [s.im_h for s in res])
        ax_m.set(xlabel="omega", ylabel="dB")
        ax_p.set(xlabel="omega", ylabel="deg")
        ax_n.set(xlabel="Re H", ylabel="Im H")
        ax_m.legend(fontsize=7)
        fig.tight_layout()
        fig.savefig(args.plot, dpi=120)
        print(f"wrote {args.plot}")


if __name__ == "__main__":
    main()
