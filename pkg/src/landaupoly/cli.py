"""Command-line front end.

    landau radius  --theorem t1 --m 2 --M 2,1 --p 1
    landau table   --theorem t2 --m 2 --M-sweep 1:3:0.5
    landau compare --m 2 --M-sweep 1.5:3:0.5
    landau verify  --theorem t3 --m 2 --M 1.5,1.2 --seed 7
    landau witness --theorem t1 --m 2 --M 2,1 --p 1 --r 0.3
    landau curve   --theorem t3 --m 2 --M 1,1 --samples 100
    landau boundary --theorem t4 --m 2 --M 2,1 --format svg

Exit status is 0 on success, 1 on bad flags or parameters and 2 when a
requested verification fails.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from typing import Optional, Sequence

import numpy as np

from .extremal import WitnessError, build_extremal, g1_spec, g4_spec, sharpness_witness
from .polyfn import eval_poly
from .radii import LandauParams, ParamError, Variant, landau_radii, make_params, profile_value
from .verify import circle_points, generate_admissible, run_verification

EXIT_OK = 0
EXIT_PARAM = 1
EXIT_VERIFY = 2

FORMATS = {
    "radius": ("json",),
    "verify": ("json",),
    "witness": ("json",),
    "table": ("csv",),
    "compare": ("csv",),
    "curve": ("csv", "svg"),
    "boundary": ("csv", "svg"),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".15g")


def _floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ParamError(f"cannot parse number list {text!r}") from None


def params_from_strings(theorem: str, m: Optional[int], M: str, p: Optional[str] = None) -> LandauParams:
    variant = Variant.parse(theorem)
    Ms = _floats(M)
    if not Ms:
        raise ParamError("--M is required")
    if m is None:
        m = len(Ms)
    ps = ()
    if p:
        raw = _floats(p)
        if any(x != int(x) for x in raw):
            raise ParamError("p_k must be integers")
        ps = tuple(int(x) for x in raw)
    if len(Ms) not in (1, m) and variant is not Variant.CLASSICAL:
        raise ParamError(f"--M needs 1 or {m} values, got {len(Ms)}")
    return make_params(variant, m, Ms, ps)


def parse_params(args: argparse.Namespace) -> LandauParams:
    """Validated parameters from parsed flags; raises :class:`ParamError` naming the violated hypothesis."""
    return params_from_strings(args.theorem, args.m, args.M, args.p)


def parse_sweep(text: str) -> np.ndarray:
    try:
        a, b, step = (float(t) for t in text.split(":"))
    except ValueError:
        raise ParamError(f"sweep must look like start:stop:step, got {text!r}") from None
    if step <= 0 or b < a:
        raise ParamError("sweep needs step > 0 and stop >= start")
    n = int(math.floor((b - a) / step + 1e-9)) + 1
    return a + step * np.arange(n)


# ---------------------------------------------------------------- writers


def csv_text(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])
    return buf.getvalue()


def svg_polyline(x: np.ndarray, y: np.ndarray, closed: bool = False) -> str:
    """Polyline scaled into the unit view box (y axis pointing up)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if closed:
        x, y = np.r_[x, x[:1]], np.r_[y, y[:1]]
    span = max(np.ptp(x), np.ptp(y)) or 1.0
    u = (x - x.min()) / span
    v = 1.0 - (y - y.min()) / span
    pts = " ".join(f"{fmt(a)},{fmt(b)}" for a, b in zip(u, v))
    return (
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1">\n'
        f'<polyline points="{pts}"/>\n'
        "</svg>\n"
    )


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# ---------------------------------------------------------------- commands


def radius_record(params: LandauParams) -> dict:
    res = landau_radii(params)
    return {
        **params.to_dict(),
        "radius": res.radius,
        "schlicht_radius": res.schlicht_radius,
        "degenerate": res.degenerate,
        "schlicht_clamped": res.schlicht_clamped,
        "residual": res.residual,
    }


def cmd_radius(args):
    return dumps(radius_record(parse_params(args))), EXIT_OK


def cmd_table(args):
    rows = []
    for M in parse_sweep(args.M_sweep):
        params = params_from_strings(args.theorem, args.m, fmt(M), args.p)
        res = landau_radii(params)
        rows.append((M, res.radius, res.schlicht_radius, res.degenerate, res.schlicht_clamped))
    header = ["M", "radius", "schlicht_radius", "degenerate", "schlicht_clamped"]
    return csv_text(header, rows), EXIT_OK


def cmd_compare(args):
    rows = []
    for M in parse_sweep(args.M_sweep):
        r2 = landau_radii(make_params(Variant.T2, args.m, M)).radius
        r3 = landau_radii(make_params(Variant.TC, args.m, M)).radius
        rows.append((M, r2, r3, r2 > r3))
    return csv_text(["M", "r2_T2", "r3_TC", "improved"], rows), EXIT_OK


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("LANDAU_SEED")
    if env is None:
        raise ParamError("a seed is required (--seed or LANDAU_SEED)")
    try:
        return int(env)
    except ValueError:
        raise ParamError(f"LANDAU_SEED must be an integer, got {env!r}") from None


def cmd_verify(args):
    params = parse_params(args)
    report = run_verification(
        params,
        _seed(args),
        degree=args.degree,
        grid_points=args.grid_points,
        pairs=args.pairs,
        boundary_samples=args.boundary_samples,
    )
    return report.to_json() + "\n", EXIT_OK if report.passed else EXIT_VERIFY


def _extremal_spec(params: LandauParams):
    if params.variant is Variant.T1:
        return g1_spec(params)
    if params.variant is Variant.T4:
        return g4_spec(params)
    raise ParamError("extremal functions exist only for theorems t1 and t4")


def cmd_witness(args):
    params = parse_params(args)
    spec = _extremal_spec(params)
    r0 = landau_radii(params).radius
    r = args.r if args.r is not None else min(r0 + 0.05, 1.0)
    try:
        w = sharpness_witness(spec, r)
    except ValueError as exc:
        raise ParamError(str(exc)) from None
    except WitnessError as exc:
        return dumps({"radius": r, "error": str(exc)}), EXIT_VERIFY
    G = build_extremal(spec)
    gap = abs(eval_poly(G, w.x1) - eval_poly(G, w.x2))
    out = {"radius": r, "univalence_radius": r0, "x1": w.x1, "x2": w.x2, "epsilon": w.epsilon, "image_gap": gap}
    return dumps(out), EXIT_OK if gap <= 1e-10 else EXIT_VERIFY


def cmd_curve(args):
    params = parse_params(args)
    if params.variant is Variant.CLASSICAL:
        raise ParamError("the classical theorem has no profile curve")
    lo, hi = params.bracket
    r = np.linspace(lo, hi, args.samples, endpoint=params.closed_interval)
    g = np.array([profile_value(params, x) for x in r])
    if args.format == "svg":
        return svg_polyline(r, g), EXIT_OK
    return csv_text(["r", "profile"], zip(r, g)), EXIT_OK


def cmd_boundary(args):
    params = parse_params(args)
    which = args.function
    if which is None:
        which = "extremal" if params.variant in (Variant.T1, Variant.T4) else "admissible"
    if which == "extremal":
        F = build_extremal(_extremal_spec(params))
    else:
        F = generate_admissible(params, args.degree, _seed(args))
    r = args.r if args.r is not None else min(landau_radii(params).radius, 1.0 - 1e-3)
    if not 0 < r < 1:
        raise ParamError("--r must lie in (0, 1)")
    theta = 2.0 * np.pi * np.arange(args.samples) / args.samples
    w = eval_poly(F, circle_points(args.samples, r))
    if args.format == "svg":
        return svg_polyline(w.real, w.imag, closed=True), EXIT_OK
    return csv_text(["theta", "re", "im"], zip(theta, w.real, w.imag)), EXIT_OK


COMMANDS = {
    "radius": cmd_radius,
    "table": cmd_table,
    "compare": cmd_compare,
    "verify": cmd_verify,
    "witness": cmd_witness,
    "curve": cmd_curve,
    "boundary": cmd_boundary,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="landau", description="Landau-type radii for poly-analytic functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, params=True, theorem_default=None):
        sp = sub.add_parser(name, help=help)
        if params:
            sp.add_argument("--theorem", default=theorem_default, required=theorem_default is None)
            sp.add_argument("--m", type=int, default=None, help="order (default: length of --M)")
            sp.add_argument("--p", default=None, help="comma list of zero orders p_1..p_{m-1} (t1)")
        sp.add_argument("--output", "-o", default=None)
        sp.add_argument("--format", default=None)
        return sp

    sp = add("radius", "solve for the univalence and schlicht radii")
    sp.add_argument("--M", required=True)

    sp = add("table", "radii over a sweep of a common bound M")
    sp.add_argument("--M-sweep", dest="M_sweep", required=True)

    sp = add("compare", "t2 radius against the tc radius over a sweep", params=False)
    sp.add_argument("--m", type=int, default=2)
    sp.add_argument("--M-sweep", dest="M_sweep", required=True)

    sp = add("verify", "run the numerical check suite")
    sp.add_argument("--M", required=True)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--degree", type=int, default=6)
    sp.add_argument("--grid-points", type=int, default=400)
    sp.add_argument("--pairs", type=int, default=2000)
    sp.add_argument("--boundary-samples", type=int, default=4096)

    sp = add("witness", "non-injectivity witness for the extremal past its radius")
    sp.add_argument("--M", required=True)
    sp.add_argument("--r", type=float, default=None)

    sp = add("curve", "profile samples (r, G(r))")
    sp.add_argument("--M", required=True)
    sp.add_argument("--samples", type=int, default=100)

    sp = add("boundary", "image of the circle |z| = r")
    sp.add_argument("--M", required=True)
    sp.add_argument("--r", type=float, default=None)
    sp.add_argument("--samples", type=int, default=1024)
    sp.add_argument("--function", choices=("extremal", "admissible"), default=None)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--degree", type=int, default=6)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        allowed = FORMATS[args.command]
        if args.format is None:
            args.format = allowed[0]
        if args.format not in allowed:
            raise UsageError(f"--format {args.format} is not available for {args.command}")
        if getattr(args, "samples", 1) < 1:
            raise UsageError("--samples must be positive")
        text, code = COMMANDS[args.command](args)
    except (UsageError, ParamError) as exc:
        print(f"landau: error: {exc}", file=stderr)
        return EXIT_PARAM
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
