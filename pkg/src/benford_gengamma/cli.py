"""``benford-gengamma`` command line tool.

Subcommands emit plot-ready CSV (``# key=value`` metadata lines, a header
row, then data) or JSON (``{"metadata": ..., "rows": [...]}``). Exit status
is 0 on success, 2 for invalid arguments and 3 when a numerical routine
fails to converge.
"""

import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import __version__
from .analysis import (
    SMALL_SAMPLE_WARNING,
    bound_sweep,
    deviation_bound,
    ks_sweep,
    mantissas_from_logs,
)
from .benford import benford_probs, digit_histogram_from_mantissas, sse_error
from .errors import DomainError, TruncationError
from .gengamma import GenGammaParams, sample
from .wrapped_pdf import (
    DirectSumConfig,
    direct_pdf_grid,
    fourier_pdf_grid,
    min_terms,
    truncation_bound,
)

DEFAULT_SEED = 20211
EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class UsageError(Exception):
    pass


def fmt(value):
    """Locale-independent text for one cell; floats get 17 significant digits."""
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return "" if value is None else str(value)


def _jsonable(value):
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def render(metadata, columns, rows, fmt_name):
    if fmt_name == "json":
        doc = {
            "metadata": {k: _jsonable(v) for k, v in metadata.items()},
            "rows": [{c: _jsonable(v) for c, v in zip(columns, row)} for row in rows],
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    buf = io.StringIO()
    for key, value in metadata.items():
        buf.write(f"# {key}={fmt(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


GNUPLOT_TEMPLATES = {
    "sample": ('set style data points\nset xlabel "digit"\nset ylabel "frequency"\n'
               'plot "{path}" using 1:2 title "observed", "" using 1:3 title "Benford"\n'),
    "pdf": ('set xlabel "u"\nset ylabel "f_M(u)"\n'
            'plot "{path}" using 1:2 with lines title "density", 1 title "uniform"\n'),
    "deviation": ('set xlabel "parameter"\nset ylabel "deviation bound"\n'
                  'plot "{path}" using 1:5 with points pt 7 title "bound"\n'),
    "kstest": ('set xlabel "d"\nset ylabel "p"\nset dgrid3d\nset view map\nset contour\n'
               'splot "{path}" using 1:2:3 with pm3d title "KS statistic"\n'),
}


def _gnuplot_script(command, data_path):
    head = 'set datafile separator ","\nset datafile commentschars "#"\nset key autotitle columnhead\n'
    return head + GNUPLOT_TEMPLATES[command].format(path=data_path)


# -- argument validation -----------------------------------------------------

def _positive(name, value):
    if value is None or not math.isfinite(value) or value <= 0:
        raise UsageError(f"--{name} must be a finite positive number, got {value!r}")
    return value


def _params(args):
    for name in ("a", "d", "p"):
        _positive(name, getattr(args, name))
    if args.base < 2:
        raise UsageError(f"--base must be an integer greater than 1, got {args.base!r}")
    return GenGammaParams(args.a, args.d, args.p, args.base)


def _count(name, value, minimum=1):
    if value < minimum:
        raise UsageError(f"--{name} must be at least {minimum}, got {value!r}")
    return value


def _axis_values(args):
    _count("steps", args.steps)
    lo, hi = getattr(args, "from"), args.to
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise UsageError("--from and --to must be finite")
    if args.steps == 1:
        return np.array([lo])
    return np.linspace(lo, hi, args.steps)


# -- subcommands ---------------------------------------------------------------

def cmd_sample(args):
    params = _params(args)
    _count("n", args.n)
    batch = sample(args.n, params, args.seed)
    hist = digit_histogram_from_mantissas(mantissas_from_logs(batch.log_values, params.base),
                                          params.base)
    sse = sse_error(hist)
    metadata = {"command": "sample", "a": params.a, "d": params.d, "p": params.p,
                "base": params.base, "n": args.n, "seed": args.seed, "sse": sse}
    theory = benford_probs(params.base)
    rows = [(digit, float(freq), float(theory[digit - 1]))
            for digit, freq in enumerate(hist.frequencies, start=1)]
    rows.append(("sse", sse, None))
    return metadata, ["digit", "observed_freq", "benford_freq"], rows


def cmd_pdf(args):
    params = _params(args)
    _positive("eps", args.eps)
    _count("grid", args.grid, 2)
    terms = min_terms(params, args.eps)
    u = np.linspace(0.0, 1.0, args.grid)
    metadata = {"command": "pdf", "a": params.a, "d": params.d, "p": params.p,
                "base": params.base, "eps": args.eps, "method": args.method}
    if args.method == "direct":
        cfg = DirectSumConfig(tail_tolerance=args.tail_tol)
        values, tails = direct_pdf_grid(u, params, cfg)
        metadata.update(tail_tolerance=args.tail_tol, error_bound=float(np.max(tails)))
    else:
        values = fourier_pdf_grid(u, params, terms)
        metadata.update(M=terms, error_bound=truncation_bound(params, terms))
    rows = [(float(x), float(f)) for x, f in zip(u, values)]
    return metadata, ["u", "f"], rows


def cmd_deviation(args):
    params = _params(args)
    _positive("eps", args.eps)
    _count("grid", args.grid, 64)
    metadata = {"command": "deviation", "a": params.a, "d": params.d, "p": params.p,
                "base": params.base, "eps": args.eps, "grid": args.grid}
    if args.axis is None:
        r = deviation_bound(params, args.eps, args.grid)
        columns = ["a", "d", "p", "base", "eps", "M", "sup_residual", "lipschitz_slack", "bound"]
        rows = [(params.a, params.d, params.p, params.base, r.epsilon, r.terms,
                 r.sup_residual, r.lipschitz_slack, r.bound)]
        return metadata, columns, rows
    values = _axis_values(args)
    if np.any(values <= 0):
        raise UsageError(f"--from/--to must give positive values for axis {args.axis}")
    grid = bound_sweep(args.axis, values, params, args.eps, args.grid)
    metadata["axis"] = args.axis
    columns = ["axis_value", "M", "sup_residual", "lipschitz_slack", "bound"]
    rows = [(float(v), r.terms, r.sup_residual, r.lipschitz_slack, r.bound)
            for v, r in zip(values, grid.reports)]
    return metadata, columns, rows


def cmd_kstest(args):
    _positive("a", args.a)
    if args.base < 2:
        raise UsageError(f"--base must be an integer greater than 1, got {args.base!r}")
    _count("n", args.n)
    values = _axis_values(args)
    if np.any(values <= 0):
        raise UsageError("--from/--to must give positive d and p values")
    grid = ks_sweep(values, values, args.a, args.base, args.n, args.seed, workers=args.workers)
    warning = SMALL_SAMPLE_WARNING if args.n < 100 else ""
    metadata = {"command": "kstest", "a": args.a, "base": args.base, "n": args.n,
                "seed": args.seed}
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    rows = [(d, p, stat, warning) for d, p, stat in grid.rows()]
    return metadata, ["d", "p", "statistic", "warning"], rows


COMMANDS = {"sample": cmd_sample, "pdf": cmd_pdf, "deviation": cmd_deviation,
            "kstest": cmd_kstest}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=float, default=1.0, help="scale parameter a")
    common.add_argument("--d", type=float, default=0.5, help="shape parameter d")
    common.add_argument("--p", type=float, default=0.5, help="power parameter p")
    common.add_argument("--base", type=int, default=10, help="digit base B (integer > 1)")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--gnuplot", metavar="PATH",
                        help="also write a gnuplot script plotting --out")

    parser = argparse.ArgumentParser(prog="benford-gengamma",
                                     description="Benford deviation of the generalized gamma "
                                                 "distribution.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sample = sub.add_parser("sample", parents=[common],
                              help="first-digit frequencies of a simulated sample")
    p_sample.add_argument("--n", type=int, default=10_000)
    p_sample.add_argument("--seed", type=int, default=DEFAULT_SEED)

    p_pdf = sub.add_parser("pdf", parents=[common], help="density of log_B X mod 1 on a grid")
    p_pdf.add_argument("--eps", type=float, default=0.01, help="pointwise truncation error")
    p_pdf.add_argument("--grid", type=int, default=201, help="number of u points in [0, 1]")
    p_pdf.add_argument("--method", choices=("fourier", "direct"), default="fourier")
    p_pdf.add_argument("--tail-tol", type=float, default=1e-10,
                       help="tail tolerance of the direct sum")

    p_dev = sub.add_parser("deviation", parents=[common],
                           help="bound on the first-digit deviation from Benford")
    p_dev.add_argument("--eps", type=float, default=0.01)
    p_dev.add_argument("--grid", type=int, default=1024, help="grid size of the sup search")
    p_dev.add_argument("--axis", choices=("a", "d", "p"),
                       help="sweep this parameter from --from to --to")
    p_dev.add_argument("--from", type=float, default=0.1)
    p_dev.add_argument("--to", type=float, default=2.0)
    p_dev.add_argument("--steps", type=int, default=20)

    p_ks = sub.add_parser("kstest", parents=[common],
                          help="KS statistic of log_B X mod 1 over a (d, p) grid")
    p_ks.add_argument("--n", type=int, default=10_000)
    p_ks.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_ks.add_argument("--from", type=float, default=0.2)
    p_ks.add_argument("--to", type=float, default=2.0)
    p_ks.add_argument("--steps", type=int, default=10)
    p_ks.add_argument("--workers", type=int, default=None, help="threads for the sweep")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.gnuplot and (not args.out or args.format != "csv"):
        print("benford-gengamma: error: --gnuplot needs --out with --format csv",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        metadata, columns, rows = COMMANDS[args.command](args)
    except (UsageError, DomainError) as exc:
        print(f"benford-gengamma {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (TruncationError, ArithmeticError) as exc:
        print(f"benford-gengamma {args.command}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC

    text = render(metadata, columns, rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.gnuplot:
        with open(args.gnuplot, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(_gnuplot_script(args.command, args.out))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
