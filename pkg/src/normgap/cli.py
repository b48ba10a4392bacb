"""Command-line surface.

Subcommands
    constants  solved extremal constants and the bound-comparison crossover
    delta      uniform distance of a JSON distribution to the normal CDF
    extremal   the extremal two-point law (or its mirror) as JSON
    sweep      distance over the two-point family, CSV of (a, delta)
    curves     sampled bound/tail/gap/CDF series, CSV
    verify     randomized certification campaign
    compare    one-summand bound versus the sharp uniform bound

Exit codes follow sysexits where sensible: 0 success, 1 campaign violations,
2 class-membership violation on ``delta``, 64 usage, 65 malformed data,
66 unreadable input, 70 internal invariant failure.
"""

import argparse
import json
import sys
from dataclasses import asdict

from . import __version__, distributions, extremal, metrics, verify
from .errors import (
    ArgumentError,
    DomainError,
    InconsistencyError,
    InternalError,
    NormGapError,
    PreconditionError,
)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_NOT_IN_CLASS = 2
EXIT_USAGE = 64
EXIT_DATA = 65
EXIT_NOINPUT = 66
EXIT_INTERNAL = 70

_MEMBERSHIP_TOL = 1e-9


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt_value(v):
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _emit(pairs, fmt, out):
    if fmt == "json":
        out.write(json.dumps(dict(pairs), indent=2) + "\n")
    else:
        for key, value in pairs:
            out.write(f"{key} = {_fmt_value(value)}\n")


def _read_distribution(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return distributions.loads(text)


def build_parser():
    parser = _Parser(
        prog="normgap",
        description=(
            "Sharp uniform-distance constant between the standard normal law "
            "and zero-mean unit-variance distributions, and the two-point law "
            "attaining it."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("constants", help="print the solved extremal constants")
    p.add_argument("--tol", type=float, default=1e-12,
                   help="root bracket width at termination (default 1e-12)")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("delta", help="uniform distance of a JSON distribution to the normal CDF")
    p.add_argument("--input", required=True,
                   help="path to a vclass-dist/1 JSON file, or - for stdin")
    p.add_argument("--standardize", action="store_true",
                   help="map the input to zero mean/unit variance first")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("extremal", help="print the extremal two-point law as JSON")
    p.add_argument("--mirror", action="store_true", help="emit the mirrored law instead")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--output", help="write to this path instead of stdout")

    p = sub.add_parser("sweep", help="distance over the two-point family (CSV)")
    p.add_argument("--a-min", type=float, default=1e-2)
    p.add_argument("--a-max", type=float, default=1e2)
    p.add_argument("--n-grid", type=int, default=2000)
    p.add_argument("--mirrored", action="store_true",
                   help="sweep the mirrored laws instead")
    p.add_argument("--output",
                   help="CSV path; without it the CSV goes to stdout and the "
                        "summary is suppressed")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("curves", help="sampled bound/tail/gap/CDF series (CSV)")
    p.add_argument("--range-min", type=float, default=-5.0)
    p.add_argument("--range-max", type=float, default=5.0)
    p.add_argument("--step", type=float, default=0.01)
    p.add_argument("--output", help="CSV path; default stdout")

    p = sub.add_parser("verify", help="randomized certification campaign")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--max-atoms", type=int, default=12)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--sampler", choices=(verify.SAMPLER_UNIFORM, verify.SAMPLER_NEAR_EXTREMAL),
                   default=verify.SAMPLER_UNIFORM)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compare", help="one-summand bound vs the sharp uniform bound")
    p.add_argument("--input", required=True,
                   help="path to a vclass-dist/1 JSON file, or - for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _cmd_constants(args, out):
    c = extremal.solve_constants(args.tol)
    _emit([
        ("x_phi", c.x_phi),
        ("c_phi", c.c_phi),
        ("inv_sqrt_8pi", c.target),
        ("crossover", c.c_phi / metrics.C1_ONE_SUMMAND),
        ("solve_tol", c.solve_tol),
    ], args.format, out)
    return EXIT_OK


def _cmd_delta(args, out):
    d = _read_distribution(args.input)
    if args.standardize:
        d = distributions.standardize(d)
    in_class = distributions.is_standardized(d, _MEMBERSHIP_TOL)
    report = metrics.kolmogorov_distance(d)
    c = extremal.constants()
    pairs = list(asdict(report).items()) + [
        ("c_phi", c.c_phi),
        ("in_class", in_class),
    ]
    _emit(pairs, args.format, out)
    if not in_class:
        print(
            f"warning: input is not zero-mean/unit-variance within {_MEMBERSHIP_TOL:g}; "
            "the uniform bound does not apply",
            file=sys.stderr,
        )
        return EXIT_NOT_IN_CLASS
    if report.delta > c.c_phi + 1e-12:
        raise InternalError("distance above the sharp bound for an in-class input")
    return EXIT_OK


def _cmd_extremal(args, out):
    c = extremal.solve_constants(args.tol)
    d = distributions.extremal_distribution(c, mirrored=args.mirror)
    text = distributions.dumps(d, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_sweep(args, out):
    result = verify.sweep_two_point(args.a_min, args.a_max, args.n_grid,
                                    mirrored=args.mirrored)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            verify.write_sweep_csv(result, fh)
        _emit([
            ("best_a", result.best_a),
            ("best_delta", result.best_delta),
            ("refine_iterations", result.refine_iterations),
            ("extreme_params", result.extreme_params),
            ("csv", args.output),
        ], args.format, out)
    else:
        verify.write_sweep_csv(result, out)
    return EXIT_OK


def _cmd_curves(args, out):
    dump = verify.dump_curves(args.range_min, args.range_max, args.step)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            verify.write_curves_csv(dump, fh)
    else:
        verify.write_curves_csv(dump, out)
    return EXIT_OK


def _cmd_verify(args, out):
    result = verify.random_campaign(args.trials, max_atoms=args.max_atoms,
                                    seed=args.seed, sampler=args.sampler)
    pairs = [
        ("trials", result.n_trials),
        ("max_atoms", result.max_atoms),
        ("seed", result.seed),
        ("sampler", result.sampler),
        ("violations", result.n_violations),
        ("max_delta", result.max_delta),
        ("max_delta_trial", result.max_delta_trial),
        ("c_phi", extremal.constants().c_phi),
    ]
    if args.format == "json":
        payload = dict(pairs)
        payload["violation_records"] = result.violations
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        _emit(pairs, "text", out)
        for rec in result.violations[:10]:
            out.write(f"violation: {json.dumps(rec)}\n")
    return EXIT_OK if result.passed else EXIT_VIOLATIONS


def _cmd_compare(args, out):
    d = _read_distribution(args.input)
    report = metrics.compare_berry_esseen(d)
    _emit(list(asdict(report).items()), args.format, out)
    return EXIT_OK


_DISPATCH = {
    "constants": _cmd_constants,
    "delta": _cmd_delta,
    "extremal": _cmd_extremal,
    "sweep": _cmd_sweep,
    "curves": _cmd_curves,
    "verify": _cmd_verify,
    "compare": _cmd_compare,
}


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"normgap: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    try:
        return _DISPATCH[args.command](args, out)
    except FileNotFoundError as exc:
        print(f"normgap: cannot read input: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except IsADirectoryError as exc:
        print(f"normgap: cannot read input: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except PermissionError as exc:
        print(f"normgap: cannot read input: {exc}", file=sys.stderr)
        return EXIT_NOINPUT
    except InternalError as exc:
        print(f"normgap: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ArgumentError, DomainError, PreconditionError, InconsistencyError,
            NormGapError) as exc:
        print(f"normgap: {exc}", file=sys.stderr)
        return EXIT_DATA


def console_main():
    sys.exit(main())


if __name__ == "__main__":
    console_main()
