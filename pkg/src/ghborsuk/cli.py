"""Command-line interface: ``ghborsuk VERB ...``.

Exit codes: 0 success, 1 computation/validation/verification failure,
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import io as mio
from .borsuk import borsuk_number, diameter_graph
from .generators import InvalidSpec, generate, parse_spec
from .metric import ToleranceConfig, ValidationError, delta_simplex, diameter
from .solver import SolverOptions, TooLarge, gh_bounds, gh_exact, gh_shortcut
from .verify import ALIASES, SUITES, report_json, run_suites


def _common():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--tol-eq", type=float, default=1e-9, help="relative equality tolerance")
    p.add_argument("--tol-tri", type=float, default=1e-9, help="relative triangle-inequality slack")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-points", type=int, default=10)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ghborsuk",
        description="Exact Gromov-Hausdorff distances and Borsuk numbers of finite metric spaces.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("validate", parents=[_common()], help="check the metric axioms")
    p.add_argument("file")
    p = sub.add_parser("info", parents=[_common()], help="size, diameter, distance spectrum")
    p.add_argument("file")
    p = sub.add_parser("gh", parents=[_common()], help="Gromov-Hausdorff distance of two spaces")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--no-shortcuts", action="store_true", help="always run the exhaustive search")
    p = sub.add_parser("borsuk", parents=[_common()], help="Borsuk number with a witness partition")
    p.add_argument("file")
    p = sub.add_parser("delta", parents=[_common()], help="write the single-distance space lambda*Delta_m")
    p.add_argument("m", type=int)
    p.add_argument("lam", metavar="LAMBDA", type=float)
    p.set_defaults(format="json")
    p = sub.add_parser("gen", parents=[_common()], help="write a generated space, SPEC = kind:n[:dim][:scale][:seed]")
    p.add_argument("spec")
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(format="json")
    p = sub.add_parser("verify", parents=[_common()], help="run seeded verification suites")
    p.add_argument("suites", nargs="+", metavar="SUITE",
                   help=f"a1..a14, all, or one of: {', '.join(sorted(ALIASES))}")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=None)
    return parser


def _tol(args):
    return ToleranceConfig(eps_tri=args.tol_tri, eps_eq=args.tol_eq)


def _load(path, args):
    return mio.load_space(path, _tol(args))


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _write_space(args, X):
    # matrix writers: json = distance-matrix document, text = CSV
    sys.stdout.write(mio.dumps_csv(X) if args.format == "text" else mio.dumps_json(X) + "\n")


def cmd_validate(args):
    X = _load(args.file, args)
    _emit(args, {"valid": True, "n": X.n, "diam": diameter(X)},
          f"valid metric space: n={X.n}, diam={diameter(X)!r}")
    return 0


def cmd_info(args):
    X = _load(args.file, args)
    spectrum = Counter(X.dist[i, j] for i in range(X.n) for j in range(i + 1, X.n))
    edges = len(diameter_graph(X).edges) if X.n > 1 else 0
    payload = {
        "n": X.n,
        "diam": diameter(X),
        "spectrum": [[float(d), c] for d, c in sorted(spectrum.items())],
        "diameter_graph_edges": edges,
    }
    lines = [f"n: {X.n}", f"diameter: {diameter(X)!r}",
             f"distinct distances: {len(spectrum)}",
             *(f"  {float(d)!r} x{c}" for d, c in sorted(spectrum.items())),
             f"diameter graph edges: {edges}"]
    _emit(args, payload, "\n".join(lines))
    return 0


def _gh_text(payload):
    lines = [f"value: {payload['value']!r}", f"method: {payload['method']}",
             f"bounds: [{payload['lower']!r}, {payload['upper']!r}]"]
    if payload.get("witness") is not None:
        lines.append(f"witness: {json.dumps(payload['witness'])}")
    return "\n".join(lines)


def cmd_gh(args):
    tol = _tol(args)
    X, Y = _load(args.file1, args), _load(args.file2, args)
    opts = SolverOptions(args.max_points, not args.no_shortcuts, args.workers, tol)
    try:
        res = gh_exact(X, Y, opts)
    except TooLarge as exc:
        res = None
        if opts.allow_shortcuts:
            beta = {}
            for key, S in (("beta_x", X), ("beta_y", Y)):
                if S.n > 1:
                    beta[key] = borsuk_number(S, tol).number
            res = gh_shortcut(X, Y, tol=tol, **beta)
        if res is None:
            print(f"TooLarge: {exc}; reporting bounds only", file=sys.stderr)
            lo, hi = gh_bounds(X, Y)
            payload = {"value": None, "method": "bounds", "lower": lo, "upper": hi, "witness": None}
            _emit(args, payload, _gh_text(payload))
            return 0
    payload = res.to_dict()
    _emit(args, payload, _gh_text(payload))
    return 0


def cmd_borsuk(args):
    X = _load(args.file, args)
    res = borsuk_number(X, _tol(args))
    text = "\n".join([f"beta: {res.number}",
                      f"witness: {json.dumps([list(b) for b in res.witness.blocks])}",
                      f"epsilon: {res.epsilon!r}", f"diam: {res.diam!r}"])
    _emit(args, res.to_dict(), text)
    return 0


def cmd_delta(args):
    _write_space(args, delta_simplex(args.m, args.lam))
    return 0


def cmd_gen(args):
    _write_space(args, generate(parse_spec(args.spec, args.seed)))
    return 0


def cmd_verify(args):
    for name in args.suites:
        if name.lower() != "all" and ALIASES.get(name.lower(), name.lower()) not in SUITES:
            print(f"unknown suite {name!r}", file=sys.stderr)
            return 2
    reports = run_suites([s.lower() for s in args.suites], args.seed, args.trials, args.workers)
    if args.format == "json":
        print(report_json(reports))
    else:
        for r in reports:
            print(r.line())
            for f in r.failures[:10]:
                print(f"    {f}")
            for note in r.notes:
                print(f"    note: {note}")
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "validate": cmd_validate, "info": cmd_info, "gh": cmd_gh, "borsuk": cmd_borsuk,
    "delta": cmd_delta, "gen": cmd_gen, "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.verb](args)
    except (ValidationError, InvalidSpec, ValueError, OSError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
