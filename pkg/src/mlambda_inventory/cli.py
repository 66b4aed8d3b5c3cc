"""Command line entry point: ``mlambda-inventory {fit,solve,sweep}``.

Exit codes: 0 success, 2 I/O error, 3 parse/config/usage error,
4 quadrature oracle mismatch, 5 nonpositive demand support.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import sys
import warnings
from typing import Sequence

from .config import RunConfig, load_config
from .exceptions import ConfigError, NonpositiveSupport, ParseError
from .expectation import expected_reciprocal_quadrature
from .fuzzy import Lambda
from .ingestion import fit_table, read_samples, write_fitted
from .inventory import Solution, lambda_sweep

EXIT_OK = 0
EXIT_IO = 2
EXIT_CONFIG = 3
EXIT_ORACLE = 4
EXIT_SUPPORT = 5

ORACLE_REL_TOL = 1e-6


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _fmt(v: float) -> str:
    return repr(float(v))


def _lambda_arg(text: str) -> Lambda:
    try:
        return Lambda.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


@contextlib.contextmanager
def _output(path):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh


def _emit_warnings(caught):
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)


def cmd_fit(args) -> int:
    table = read_samples(args.input)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        demands = fit_table(table)
    _emit_warnings(caught)
    buf = io.StringIO()
    write_fitted(demands, buf)
    with _output(args.output) as out:
        out.write(buf.getvalue())
    return EXIT_OK


def _oracle_check(solutions: Sequence[Solution], cfg: RunConfig) -> list[str]:
    failures = []
    demands = {it.name: it.demand for it in cfg.model}
    for sol in solutions:
        for s in sol.per_item:
            q = expected_reciprocal_quadrature(demands[s.name], sol.lam).value
            dev = abs(q - s.expected_reciprocal) / abs(s.expected_reciprocal)
            if dev > ORACLE_REL_TOL:
                failures.append(
                    f"lambda={sol.lam.value:.6g} {s.name}: closed {s.expected_reciprocal!r} "
                    f"vs quadrature {q!r} (rel dev {dev:.3g})"
                )
    return failures


def _solve_text(solutions, cfg, out):
    items = {it.name: it for it in cfg.model}
    header = ("item", "d", "c", "h", "demand (a,b,alpha,beta)", "E(1/D)", "x*", "expected profit")
    for k, sol in enumerate(solutions):
        if k:
            out.write("\n")
        out.write(f"lambda = {sol.lam.value:.6g}\n")
        rows = []
        for s in sol.per_item:
            it = items[s.name]
            abab = ", ".join(f"{v:g}" for v in it.demand.as_abab())
            rows.append((
                s.name, f"{it.d:g}", f"{it.c:g}", f"{it.h:g}", f"({abab})",
                f"{s.expected_reciprocal:.8f}", f"{s.x_star:.2f}", f"{s.expected_profit:.2f}",
            ))
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
        for r in [header] + rows:
            cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
            out.write("  ".join(cells).rstrip() + "\n")
        out.write(f"total expected profit: {sol.total_expected_profit:.2f}\n")


def _solve_csv(solutions, cfg, out):
    items = {it.name: it for it in cfg.model}
    w = csv.writer(out, lineterminator="\n")
    w.writerow(("lambda", "item", "d", "c", "h", "a", "b", "alpha", "beta",
                "expected_reciprocal", "x_star", "expected_profit"))
    for sol in solutions:
        lam = _fmt(sol.lam.value)
        for s in sol.per_item:
            it = items[s.name]
            w.writerow((lam, s.name, _fmt(it.d), _fmt(it.c), _fmt(it.h),
                        *(_fmt(v) for v in it.demand.as_abab()),
                        _fmt(s.expected_reciprocal), _fmt(s.x_star), _fmt(s.expected_profit)))
        w.writerow((lam, "TOTAL", "", "", "", "", "", "", "", "", "",
                    _fmt(sol.total_expected_profit)))


def _run_solutions(cfg: RunConfig, lambdas):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        solutions = lambda_sweep(cfg.model, lambdas)
    _emit_warnings(caught)
    return solutions


def cmd_solve(args) -> int:
    cfg = load_config(args.config)
    lambdas = tuple(args.lambdas) if args.lambdas else cfg.lambdas
    if not lambdas:
        raise ConfigError("no lambda values: set [run] lambdas or pass --lambda")
    solutions = _run_solutions(cfg, lambdas)
    fmt = args.format or cfg.output_format
    buf = io.StringIO()
    (_solve_csv if fmt == "csv" else _solve_text)(solutions, cfg, buf)
    if args.oracle_check:
        failures = _oracle_check(solutions, cfg)
        if failures:
            for f in failures:
                print(f"oracle mismatch: {f}", file=sys.stderr)
            return EXIT_ORACLE
    with _output(args.output) as out:
        out.write(buf.getvalue())
    return EXIT_OK


def sweep_grid(start: float, stop: float, steps: int) -> list[Lambda]:
    if not 0.0 <= start <= stop <= 1.0:
        raise _UsageError("sweep needs 0 <= --from <= --to <= 1")
    if steps < 2:
        raise _UsageError("sweep needs --steps >= 2")
    span = stop - start
    grid = [start + span * k / (steps - 1) for k in range(steps)]
    grid[-1] = stop
    return [Lambda(min(1.0, max(0.0, v))) for v in grid]


def cmd_sweep(args) -> int:
    lambdas = sweep_grid(args.start.value, args.stop.value, args.steps)
    cfg = load_config(args.config)
    solutions = _run_solutions(cfg, lambdas)
    names = [it.name for it in cfg.model]
    fmt = args.format or cfg.output_format
    buf = io.StringIO()
    if fmt == "csv":
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda", *names])
        for sol in solutions:
            w.writerow([_fmt(sol.lam.value), *(_fmt(x) for x in sol.x_star)])
    else:
        header = ["lambda", *names]
        rows = [[f"{sol.lam.value:.6g}", *(f"{x:.2f}" for x in sol.x_star)] for sol in solutions]
        widths = [max(len(r[i]) for r in rows + [header]) for i in range(len(header))]
        for r in [header] + rows:
            buf.write("  ".join(c.rjust(w) for c, w in zip(r, widths)) + "\n")
    with _output(args.output) as out:
        out.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="mlambda-inventory",
        description="Fuzzy-demand inventory optimisation under the m_lambda expected value.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("fit", help="fit trapezoidal demands to a samples CSV")
    p.add_argument("input", help="samples CSV: header of item names, one row per observation")
    p.add_argument("-o", "--output", help="fitted demands CSV (default: stdout)")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("solve", help="optimal order quantities for one or more lambdas")
    p.add_argument("config")
    p.add_argument("--lambda", dest="lambdas", action="append", type=_lambda_arg,
                   metavar="L", help="lambda value, decimal or fraction; repeatable; "
                   "overrides the config")
    p.add_argument("--oracle-check", action="store_true",
                   help="recompute every E(1/D) by quadrature; exit 4 on mismatch")
    p.add_argument("--format", choices=("text_table", "csv"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="order quantities over an even lambda grid")
    p.add_argument("config")
    p.add_argument("--from", dest="start", type=_lambda_arg, default=Lambda(0.0))
    p.add_argument("--to", dest="stop", type=_lambda_arg, default=Lambda(1.0))
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--format", choices=("text_table", "csv"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_CONFIG
    except NonpositiveSupport as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SUPPORT
    except (ParseError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
