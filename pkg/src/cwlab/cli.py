"""``cwlab`` command line.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage
error, 3 numeric failure (empty body, solver failure).
"""

import argparse
import math
import sys

from . import constant_width as cw
from . import minkowski_ops as mk
from . import softness_lab as soft
from .errors import NumericError, UnsupportedQuery, UsageError
from .geometry_core import ball, direction_grid, hausdorff, normalize, width, width_report
from .render import render
from .serialize import dumps_body, format_report, load_body

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3
DEFAULT_M = {2: 4096, 3: 20000}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _csv_reals(text):
    try:
        vals = [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("values must be finite")
    return vals


def _positive_float(text):
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not (math.isfinite(v) and v > 0):
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return v


def build_parser():
    p = _Parser(prog="cwlab", description="Convex bodies of constant width: support-function toolkit.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def report_opts(sp, m=True):
        if m:
            sp.add_argument("--m", type=int, help="grid resolution (default 4096 in 2D, 20000 in 3D)")
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", help="write the report here instead of stdout")

    gen = sub.add_parser("gen", help="generate a body as JSON")
    gsub = gen.add_subparsers(dest="shape", required=True, parser_class=_Parser)
    g = gsub.add_parser("reuleaux-triangle")
    g.add_argument("--d", type=_positive_float, default=1.0)
    g.add_argument("--out")
    g = gsub.add_parser("reuleaux-polygon")
    g.add_argument("--i", type=int, required=True)
    g.add_argument("--out")
    g = gsub.add_parser("reuleaux-simplex")
    g.add_argument("--out")
    g = gsub.add_parser("ball")
    g.add_argument("--dim", type=int, choices=(2, 3), required=True)
    g.add_argument("--center", type=_csv_reals)
    g.add_argument("--radius", type=float, required=True)
    g.add_argument("--out")

    s = sub.add_parser("width", help="width in one direction or a width report over a grid")
    s.add_argument("body")
    s.add_argument("--dir", type=_csv_reals, help="direction (normalized before use)")
    report_opts(s)

    s = sub.add_parser("check-cw", help="constant-width verdict")
    s.add_argument("body")
    s.add_argument("--tol", type=_positive_float, default=1e-6)
    s.add_argument("--max-width", type=_positive_float,
                   help="also require max width <= this (fits and turns in a square of this side)")
    report_opts(s)

    s = sub.add_parser("check-pair", help="is A - B a ball?")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--tol", type=_positive_float, default=1e-6)
    report_opts(s)

    s = sub.add_parser("symmetrize", help="central symmetry map (K - K)/2")
    s.add_argument("body")
    s.add_argument("--out")

    s = sub.add_parser("hausdorff", help="Hausdorff distance on a direction grid")
    s.add_argument("a")
    s.add_argument("b")
    report_opts(s)

    s = sub.add_parser("rank", help="rank of the rotated Reuleaux support family")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--tol", type=_positive_float, default=1e-8)
    report_opts(s, m=False)

    s = sub.add_parser("project", help="project a 3D body to the plane")
    s.add_argument("body")
    s.add_argument("--out")

    s = sub.add_parser("witness", help="projection obstruction report")
    s.add_argument("--imax", type=int, default=10)
    report_opts(s, m=False)

    s = sub.add_parser("render", help="SVG (2D) or OBJ (3D) output")
    s.add_argument("body")
    s.add_argument("--format", choices=("svg", "obj"), required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--out", required=True)
    return p


def _grid_for(dim, m):
    return direction_grid(dim, DEFAULT_M[dim] if m is None else m)


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _report(args, data):
    _emit(format_report(data, args.format), args.out)


def _cmd_gen(args):
    if args.shape == "reuleaux-triangle":
        body = cw.reuleaux_triangle(args.d)
    elif args.shape == "reuleaux-polygon":
        body = cw.reuleaux_polygon(args.i)
    elif args.shape == "reuleaux-simplex":
        body = cw.reuleaux_simplex()
    else:
        center = args.center if args.center is not None else [0.0] * args.dim
        if len(center) != args.dim:
            raise UsageError(f"--center needs {args.dim} coordinates")
        body = ball(center, args.radius)
    _emit(dumps_body(body), args.out)
    return EXIT_OK


def _cmd_width(args):
    body = load_body(args.body)
    if args.dir is not None:
        if len(args.dir) != body.dim:
            raise UsageError(f"--dir needs {body.dim} coordinates")
        u = normalize(args.dir)
        _report(args, {"direction": [float(x) for x in u], "width": width(body, u)})
    else:
        _report(args, width_report(body, _grid_for(body.dim, args.m)).to_dict())
    return EXIT_OK


def _cmd_check_cw(args):
    body = load_body(args.body)
    verdict = cw.is_constant_width(body, _grid_for(body.dim, args.m), args.tol)
    data = verdict.to_dict()
    ok = verdict.is_constant
    if args.max_width is not None:
        within = verdict.report.max_width <= args.max_width + args.tol
        data["max_width_limit"] = args.max_width
        data["within_limit"] = within
        ok = ok and within
    _report(args, data)
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_check_pair(args):
    a, b = load_body(args.a), load_body(args.b)
    if a.dim != b.dim:
        raise UsageError("bodies must have the same dimension")
    ok, fit = mk.is_pair_constant_width(a, b, _grid_for(a.dim, args.m), args.tol)
    _report(args, {"is_pair": ok, "fit": fit.to_dict(), "tolerance": args.tol})
    return EXIT_OK if ok else EXIT_NEGATIVE


def _cmd_symmetrize(args):
    _emit(dumps_body(mk.central_symmetry(load_body(args.body))), args.out)
    return EXIT_OK


def _cmd_hausdorff(args):
    a, b = load_body(args.a), load_body(args.b)
    if a.dim != b.dim:
        raise UsageError("bodies must have the same dimension")
    grid = _grid_for(a.dim, args.m)
    _report(args, {"hausdorff": hausdorff(a, b, grid), "resolution": grid.m})
    return EXIT_OK


def _cmd_rank(args):
    rep = cw.support_family_rank(args.k, args.tol)
    _report(args, rep.to_dict())
    return EXIT_OK if rep.rank == rep.k + 1 else EXIT_NEGATIVE


def _cmd_project(args):
    _emit(dumps_body(soft.project(load_body(args.body))), args.out)
    return EXIT_OK


def _cmd_witness(args):
    _report(args, soft.nonopenness_report(args.imax).to_dict())
    return EXIT_OK


def _cmd_render(args):
    data = render(load_body(args.body), args.format, args.m)
    with open(args.out, "wb") as fh:
        fh.write(data)
    return EXIT_OK


COMMANDS = {
    "gen": _cmd_gen,
    "width": _cmd_width,
    "check-cw": _cmd_check_cw,
    "check-pair": _cmd_check_pair,
    "symmetrize": _cmd_symmetrize,
    "hausdorff": _cmd_hausdorff,
    "rank": _cmd_rank,
    "project": _cmd_project,
    "witness": _cmd_witness,
    "render": _cmd_render,
}


def run(argv):
    """Run the CLI on ``argv`` (without the program name) and return the exit code."""
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except (UsageError, UnsupportedQuery) as exc:
        print(f"cwlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericError as exc:
        print(f"cwlab: numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"cwlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
