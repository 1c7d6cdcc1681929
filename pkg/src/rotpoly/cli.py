"""Command-line front end.

Input documents are JSON objects with a ``kind`` key; output is CSV on
stdout.  Exit status: 0 success, 1 usage or parse error, 2 numeric-domain
error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
import warnings

import numpy as np

from . import freqresp, horner1d, poly2d, sysmodel
from .errors import RotpolyError
from .horner1d import PolySpec
from .rotalgebra import ComplexPoint

KINDS = ("polynomial", "transfer_function", "time_constants", "state_space", "poly2d")

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN = 0, 1, 2


class InputError(Exception):
    """Malformed document or flag value."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def fmt(x: float) -> str:
    """Shortest repr that round-trips to the same double; empty for NaN."""
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return repr(float(x))


def write_csv(header, rows, out=None) -> None:
    out = out or sys.stdout
    w = csv.writer(out, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) if isinstance(x, float) else x for x in row])


# -- document parsing -------------------------------------------------------

def _numbers(value, name: str) -> list[float]:
    if not isinstance(value, list) or not all(
            isinstance(x, (int, float)) and not isinstance(x, bool) for x in value):
        raise InputError(f"{name!r} must be a list of numbers")
    out = [float(x) for x in value]
    if not all(math.isfinite(x) for x in out):
        raise InputError(f"{name!r} contains non-finite values")
    return out


def _matrix(value, name: str) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise InputError(f"{name!r} must be a non-empty list of rows")
    rows = [_numbers(r, name) for r in value]
    if len({len(r) for r in rows}) != 1:
        raise InputError(f"{name!r} rows have unequal length")
    return np.array(rows, dtype=float)


def _poly(value, name: str) -> PolySpec:
    """A list of reals, or an object with ``coeff_real``/``coeff_imag``."""
    if isinstance(value, dict):
        return _poly_from_fields(value, name)
    coeffs = _numbers(value, name)
    if not coeffs:
        raise InputError(f"{name!r} is empty")
    return PolySpec.real(coeffs)


def _poly_from_fields(doc: dict, name: str) -> PolySpec:
    if "coeff_real" not in doc:
        raise InputError(f"{name}: missing 'coeff_real'")
    re = _numbers(doc["coeff_real"], "coeff_real")
    im = _numbers(doc.get("coeff_imag", [0.0] * len(re)), "coeff_imag")
    if not re or len(re) != len(im):
        raise InputError(f"{name}: coeff_real/coeff_imag must be non-empty and equal length")
    return PolySpec(tuple(re), tuple(im))


def _read_json(path: str | None):
    try:
        if path is None or path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read document: {exc}") from exc


def load_document(path: str | None) -> dict:
    doc = _read_json(path)
    if not isinstance(doc, dict) or doc.get("kind") not in KINDS:
        raise InputError(f"document must be an object with kind in {KINDS}")
    return doc


def document_to_tf(doc: dict) -> freqresp.TransferFunctionSpec:
    kind = doc["kind"]
    try:
        if kind == "transfer_function":
            gain = doc.get("gain", 1.0)
            if isinstance(gain, bool) or not isinstance(gain, (int, float)):
                raise InputError("'gain' must be a number")
            return freqresp.TransferFunctionSpec(
                _poly(doc.get("numerator"), "numerator"),
                _poly(doc.get("denominator"), "denominator"),
                float(gain))
        if kind == "time_constants":
            form = sysmodel.TimeConstantForm(
                tuple(_numbers(doc.get("numerator", []), "numerator")),
                tuple(_numbers(doc.get("denominator", []), "denominator")))
            return sysmodel.tc_to_tf(form)
        if kind == "state_space":
            return sysmodel.ss_to_tf(_state_space(doc))
    except (ValueError, KeyError) as exc:
        if isinstance(exc, RotpolyError):
            raise
        raise InputError(str(exc)) from exc
    raise InputError(f"kind {kind!r} is not a system description")


def _state_space(doc: dict) -> sysmodel.StateSpace:
    a = _matrix(doc.get("A"), "A")
    b = np.array(_flat(doc.get("B"), "B"))
    c = np.array(_flat(doc.get("C"), "C"))
    try:
        return sysmodel.StateSpace(a, b, c)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _flat(value, name: str) -> list[float]:
    if isinstance(value, list) and value and all(isinstance(r, list) for r in value):
        return [x for r in value for x in _numbers(r, name)]
    return _numbers(value, name)


def tf_to_document(tf: freqresp.TransferFunctionSpec) -> dict:
    def enc(p: PolySpec):
        if p.is_real:
            return list(p.alpha)
        return {"coeff_real": list(p.alpha), "coeff_imag": list(p.beta)}
    return {"kind": "transfer_function", "numerator": enc(tf.numerator),
            "denominator": enc(tf.denominator), "gain": tf.gain}


def _point(text: str) -> ComplexPoint:
    try:
        a, b = (float(x) for x in text.split(","))
        return ComplexPoint(a, b)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from exc


# -- subcommands --------------------------------------------------------------

def cmd_eval(args) -> int:
    doc = load_document(args.input)
    if doc["kind"] != "polynomial":
        raise InputError("eval needs a polynomial document")
    poly = _poly_from_fields(doc, "polynomial")
    pt = args.point
    res = horner1d.evaluate(poly, pt)
    header = ["a", "b", "u", "v", "abs_squared", "conj_sum"]
    row = [pt.a, pt.b, res.u, res.v,
           horner1d.abs_squared(poly, pt), horner1d.conj_sum(poly, pt)]
    if args.derivative:
        d = horner1d.eval_derivative(poly, pt)
        header += ["du", "dv"]
        row += [d.u, d.v]
    if args.reciprocal:
        r = horner1d.reciprocal(poly, pt)
        header += ["recip_re", "recip_im"]
        row += [r.a, r.b]
    write_csv(header, [row])
    return EXIT_OK


def cmd_freqresp(args) -> int:
    doc = load_document(args.input)
    tf = document_to_tf(doc)
    try:
        grid = freqresp.FrequencyGrid(args.wmin, args.wmax, args.points, args.scale)
    except ValueError as exc:
        raise InputError(f"invalid grid: {exc}") from exc
    result = freqresp.sweep(tf, grid)
    if args.format == "nyquist":
        header = ["omega", "re", "im", "mag", "phase_rad"]
        rows = [[s.omega, s.re_h, s.im_h, s.magnitude, s.phase] for s in result]
    else:
        header = ["omega", "mag_db", "phase_deg"]
        rows = []
        for s in result:
            if s.pole:
                rows.append([s.omega, math.nan, math.nan])
                continue
            db = 20.0 * math.log10(s.magnitude) if s.magnitude > 0.0 else -math.inf
            rows.append([s.omega, db, math.degrees(s.phase)])
    write_csv(header, rows)
    print(f"ops: mults={result.ops.mults} adds={result.ops.adds}", file=sys.stderr)
    return EXIT_OK


def _random_poly(n: int, kind: str, rng: random.Random) -> PolySpec:
    alpha = [rng.uniform(-1.0, 1.0) for _ in range(n + 1)]
    if kind == "real":
        return PolySpec.real(alpha)
    return PolySpec(tuple(alpha), tuple(rng.uniform(-1.0, 1.0) for _ in range(n + 1)))


def opcount_rows(nmin: int, nmax: int, kind: str, seed: int, omega: float = 1.0):
    rng = random.Random(seed)
    rows = []
    for n in range(nmin, nmax + 1):
        poly = _random_poly(n, kind, rng)
        measured = freqresp.eval_jomega(poly, omega).ops
        baseline = freqresp.conventional_eval(poly, omega).ops
        pred = freqresp.predicted_ops(n, kind)
        claim = freqresp.baseline_ops(n)
        rows.append([n, measured.mults, measured.adds, pred.mults, pred.adds,
                     claim.mults, claim.adds, baseline.mults, baseline.adds])
    return rows


OPCOUNT_HEADER = ["n", "measured_mults", "measured_adds", "predicted_mults",
                  "predicted_adds", "baseline_mults", "baseline_adds",
                  "conventional_mults", "conventional_adds"]


def cmd_opcount(args) -> int:
    if args.nmin < 0 or args.nmax < args.nmin:
        raise InputError("need 0 <= nmin <= nmax")
    if args.omega == 0.0:
        raise InputError("--omega must be non-zero")
    write_csv(OPCOUNT_HEADER,
              opcount_rows(args.nmin, args.nmax, args.kind, args.seed, args.omega))
    return EXIT_OK


def cmd_eval2d(args) -> int:
    doc = load_document(args.input)
    if doc["kind"] != "poly2d":
        raise InputError("eval2d needs a poly2d document")
    try:
        p2d = poly2d.Poly2DSpec(_matrix(doc.get("P"), "P"))
        q2d = poly2d.Poly2DSpec(_matrix(doc["Q"], "Q")) if "Q" in doc else None
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    s1, s2 = args.point, args.point2
    factors = None if not p2d.coeffs.any() else poly2d.check_separable(p2d, args.tol)
    res = poly2d.eval2d(p2d, s1, s2)
    header = ["eta_p", "theta_p", "separable"]
    row = [res.eta_p, res.theta_p, int(factors is not None)]
    if q2d is not None:
        q = poly2d.eval2d(q2d, s1, s2)
        g = poly2d.response2d(q2d, p2d, s1, s2)
        header += ["eta_q", "theta_q", "mag", "phase_rad", "re", "im"]
        row += [q.eta_p, q.theta_p, g.magnitude, g.phase, g.re, g.im]
    write_csv(header, [row])
    return EXIT_OK


def cmd_matpow(args) -> int:
    doc = _read_json(args.input)
    if not isinstance(doc, dict) or "A" not in doc:
        raise InputError("matpow needs a JSON object with an 'A' matrix")
    a = _matrix(doc["A"], "A")
    m, count = sysmodel.mat_pow_counted(a, args.rho)
    write_csv([f"col{j}" for j in range(m.shape[1])], [list(map(float, r)) for r in m])
    print(f"matrix multiplications: {count}", file=sys.stderr)
    return EXIT_OK


def cmd_ss2tf(args) -> int:
    doc = load_document(args.input)
    if doc["kind"] != "state_space":
        raise InputError("ss2tf needs a state_space document")
    json.dump(tf_to_document(document_to_tf(doc)), sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_tc2tf(args) -> int:
    doc = load_document(args.input)
    if doc["kind"] != "time_constants":
        raise InputError("tc2tf needs a time_constants document")
    json.dump(tf_to_document(document_to_tf(doc)), sys.stdout)
    sys.stdout.write("\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rotpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--input", default=None, help="JSON document (default: stdin)")
        p.set_defaults(func=func)
        return p

    p = add("eval", cmd_eval, "evaluate a polynomial at one point")
    p.add_argument("--point", type=_point, required=True, metavar="a,b")
    p.add_argument("--derivative", action="store_true")
    p.add_argument("--reciprocal", action="store_true")

    p = add("freqresp", cmd_freqresp, "sweep H(j omega) over a frequency grid")
    p.add_argument("--wmin", type=float, default=0.01)
    p.add_argument("--wmax", type=float, default=100.0)
    p.add_argument("--points", type=int, default=50)
    p.add_argument("--scale", choices=("log", "linear"), default="log")
    p.add_argument("--format", choices=("nyquist", "bode"), default="nyquist")

    p = sub.add_parser("opcount", help="measured vs claimed operation counts")
    p.add_argument("--nmin", type=int, default=0)
    p.add_argument("--nmax", type=int, default=10)
    p.add_argument("--kind", choices=("real", "complex"), default="complex")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--omega", type=float, default=1.0)
    p.set_defaults(func=cmd_opcount)

    p = add("eval2d", cmd_eval2d, "evaluate a 2D polynomial (and Q/P if Q given)")
    p.add_argument("--point", type=_point, required=True, metavar="a1,b1")
    p.add_argument("--point2", type=_point, required=True, metavar="a2,b2")
    p.add_argument("--tol", type=float, default=1e-9)

    p = add("matpow", cmd_matpow, "matrix power by square-and-multiply")
    p.add_argument("--rho", type=int, required=True)

    add("ss2tf", cmd_ss2tf, "state space to transfer function document")
    add("tc2tf", cmd_tc2tf, "time constants to transfer function document")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return args.func(args)
    except InputError as exc:
        print(f"rotpoly {args.command}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RotpolyError as exc:
        print(f"rotpoly {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
