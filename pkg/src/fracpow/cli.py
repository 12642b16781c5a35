"""Command-line front end.

Subcommands write CSV (or a vector file for ``apply``) to stdout or
``--out``. Exit status: 0 on success, 2 on usage or input errors, 1 on
numerical failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import sys

from . import experiments, fileio
from .errors import DomainError
from .linop import SpectrumInfo
from .quadrature import gauss_jacobi
from .rational import apply, apply_power_complement, build_rational_form
from .tau import Regime

log = logging.getLogger("fracpow")

STRATEGIES = experiments.STRATEGIES


def _positive_int(s):
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _alpha(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {s!r}") from None
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError(f"alpha must lie in (0, 1), got {v}")
    return v


def _positive_float(s):
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {s!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {v}")
    return v


def _tau_arg(s):
    if s in STRATEGIES:
        return s
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"--tau takes one of {', '.join(STRATEGIES)} or a positive number") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"tau must be positive, got {v}")
    return v


def _write_csv(out, header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fileio.fmt(x) if isinstance(x, float) else str(x) for x in row])
    out.write(buf.getvalue())


def _spectrum_from_args(args, op=None):
    if args.c is not None:
        return SpectrumInfo(args.c, args.lambda_max)
    if op is not None:
        spec = op.spectrum()
        if args.lambda_max is not None:
            spec = SpectrumInfo(spec.c, args.lambda_max)
        return spec
    raise DomainError("a tau strategy needs --c")


def _resolve_tau(args, op=None):
    if isinstance(args.tau, float):
        return args.tau, None
    spec = _spectrum_from_args(args, op)
    choice = experiments.choose_tau(args.tau, args.k, args.alpha, spec)
    return choice.tau, choice.regime


def cmd_quad(args, out):
    rule = gauss_jacobi(args.k, args.alpha)
    _write_csv(out, ["j", "node", "weight"],
               [(j + 1, float(t), float(w)) for j, (t, w) in enumerate(zip(rule.nodes, rule.weights))])


def cmd_form(args, out):
    tau, _ = _resolve_tau(args)
    form = build_rational_form(args.k, args.alpha, tau)
    _write_csv(out, ["j", "gamma", "eta"],
               [(j + 1, float(g), float(e)) for j, (g, e) in enumerate(zip(form.gammas, form.etas))])


def cmd_tau(args, out):
    if isinstance(args.tau, float):
        raise DomainError("the tau command takes a strategy, not a number")
    spec = SpectrumInfo(args.c, args.lambda_max)
    choice = experiments.choose_tau(args.tau, args.k, args.alpha, spec)
    _write_csv(out, ["tau", "regime"], [(float(choice.tau), Regime(choice.regime).value)])


def cmd_experiment(args, out):
    if isinstance(args.tau, float):
        raise DomainError("experiments take a tau strategy, not a number")
    n = args.N if args.N is not None else (100 if args.experiment == "ex1" else 500)
    config = experiments.ExperimentConfig(
        experiment=args.experiment, N=n, alpha=args.alpha, k_min=args.k_min,
        k_max=args.k_max, tau_strategy=args.tau,
        p=args.p if args.experiment == "ex1" else None)
    rows = experiments.run_experiment(config)
    _write_csv(out, ["k", "tau", "regime", "measured_error", "bound"],
               [(r.k, float(r.tau), r.regime.value, float(r.measured_error), float(r.bound))
                for r in rows])


def cmd_apply(args, out):
    op = fileio.read_operator(args.matrix)
    b = fileio.read_vector(args.rhs)
    if b.size != op.dim:
        raise DomainError(f"rhs has {b.size} entries, operator dimension is {op.dim}")
    tau, regime = _resolve_tau(args, op)
    log.info("tau=%.17g regime=%s", tau, regime)
    if args.complement:
        x = apply_power_complement(op, b, args.alpha, args.k, tau)
    else:
        x = apply(build_rational_form(args.k, args.alpha, tau), op, b)
    out.write(fileio.format_vector(x))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fracpow",
        description="Rational approximation of fractional operator powers L^(-alpha).")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tau_default=None, need_tau=True):
        p.add_argument("--alpha", type=_alpha, required=True)
        p.add_argument("--out", help="output file (default: stdout)")
        if need_tau:
            p.add_argument("--tau", type=_tau_arg, default=tau_default,
                           required=tau_default is None,
                           help="geometric | lambert | bounded | auto | <number>")

    p = sub.add_parser("quad", help="Gauss-Jacobi nodes and weights")
    p.add_argument("--k", type=_positive_int, required=True)
    common(p, need_tau=False)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("form", help="residues gamma_j and pole magnitudes eta_j")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--c", type=_positive_float)
    p.add_argument("--lambda-max", type=_positive_float)
    common(p)
    p.set_defaults(func=cmd_form)

    p = sub.add_parser("tau", help="select tau for a spectral interval")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--c", type=_positive_float, required=True)
    p.add_argument("--lambda-max", type=_positive_float)
    common(p, tau_default="auto")
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("experiment", help="error and bound versus k on a model operator")
    p.add_argument("experiment", choices=experiments.EXPERIMENTS)
    p.add_argument("--N", type=_positive_int)
    p.add_argument("--p", type=_positive_int, default=4, help="exponent for ex1")
    p.add_argument("--k-min", type=_positive_int, default=1)
    p.add_argument("--k-max", type=_positive_int, default=100)
    common(p, tau_default="auto")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("apply", help="apply the approximation of L^(-alpha) to a vector")
    p.add_argument("matrix", help="operator file")
    p.add_argument("--rhs", required=True, help="vector file")
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--c", type=_positive_float, help="lower spectral bound (default: computed)")
    p.add_argument("--lambda-max", type=_positive_float,
                   help="upper spectral bound (default: computed)")
    p.add_argument("--complement", action="store_true",
                   help="compute L^(1-alpha) f as the approximation applied to L f")
    common(p, tau_default="auto")
    p.set_defaults(func=cmd_apply)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "k_min", 1) > getattr(args, "k_max", 1):
        print("fracpow: error: --k-min exceeds --k-max", file=sys.stderr)
        return 2
    buf = io.StringIO()
    try:
        args.func(args, buf)
    except (DomainError, OSError) as exc:
        print(f"fracpow: error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"fracpow: numerical failure: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    return 0


if __name__ == "__main__":
    sys.exit(main())
