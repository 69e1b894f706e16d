"""Command line front end.

    tripos-surd derive --root 4
    tripos-surd eval --root 4 --n 10 --x 1
    tripos-surd error --root 4 --n 10 --x 1 --digits 24
    tripos-surd window
    tripos-surd bound -p 1 --sign neg
    tripos-surd verify-tripos
    tripos-surd sweep --root 4 --t-min 0 --t-max 1/10 --steps 10

Every number is read exactly ("p/q" or decimal text) and every command
prints the same bytes for the same invocation. Exit codes: 0 success,
1 verification failure, 2 argument or domain error.
"""
from __future__ import annotations

import argparse
import csv
from dataclasses import dataclass
from fractions import Fraction
import logging
import sys
from typing import TextIO

from .approximant import check_next_order, derive, evaluate
from .const import (
    COL_RATIO,
    COL_SURD,
    COL_T,
    COL_TAYLOR,
    COL_WINDOW,
    DEFAULT_DIGITS,
    DEFAULT_ROOT,
    EXIT_ARGUMENT_ERROR,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    GUARD_DIGITS,
    NAME,
    OPT_DIGITS,
    OPT_N,
    OPT_PERCENT,
    OPT_ROOT,
    OPT_SIGN,
    OPT_STEPS,
    OPT_T_MAX,
    OPT_T_MIN,
    OPT_X,
    OUTPUT_CSV,
    OUTPUT_JSON,
    OUTPUT_TEXT,
    SIGN_NEGATIVE,
    SIGN_POSITIVE,
    SWEEP_COLUMNS,
    TRIPOS_ROOT,
)
from .diagnostics import (
    dump_error_report,
    dump_json,
    dump_verification,
)
from .error_analysis import (
    accurate_places,
    error_report,
    in_overestimate_window,
    overestimate_window,
    percent_bound,
    taylor_error,
    true_error,
    verify_tripos,
)
from .errors import (
    ArgumentError,
    DomainError,
    VerificationFailure,
)
from .exact_numerics import (
    DecimalString,
    format_rational,
    to_decimal,
    to_scientific,
)
from .options import (
    BOUND_SCHEMA,
    DERIVE_SCHEMA,
    ERROR_SCHEMA,
    EVAL_SCHEMA,
    SWEEP_SCHEMA,
    VERIFY_SCHEMA,
    validate_options,
)

_LOGGER = logging.getLogger(__name__)

# Significant digits of the short scientific renderings.
FIGURE_DIGITS = 7
WINDOW_PLACES = 10


@dataclass(frozen=True)
class SweepRow:
    """One line of the Taylor-versus-surd comparison, errors per unit N."""

    t: Fraction
    taylor_error: DecimalString
    surd_error: DecimalString
    ratio: DecimalString | None
    in_window: bool | None

    def as_cells(self) -> dict[str, str]:
        cells = {
            COL_T: format_rational(self.t),
            COL_TAYLOR: str(self.taylor_error),
            COL_SURD: str(self.surd_error),
            COL_RATIO: "" if self.ratio is None else str(self.ratio),
            COL_WINDOW: "",
        }
        if self.in_window is not None:
            cells[COL_WINDOW] = "true" if self.in_window else "false"
        return cells


def sweep_row(k: int, t: Fraction, digits: int) -> SweepRow:
    """Compare the cubic Taylor polynomial and the surd form at t."""
    form = derive(k)
    taylor = taylor_error(k, t, digits + GUARD_DIGITS).midpoint()
    surd = true_error(form, 1, t, digits + GUARD_DIGITS).midpoint()
    ratio = None
    if taylor != 0:
        ratio = to_decimal(abs(surd) / abs(taylor), digits)
    in_window = None
    if k == TRIPOS_ROOT:
        in_window = in_overestimate_window(t)
    return SweepRow(
        t=t,
        taylor_error=to_decimal(taylor, digits),
        surd_error=to_decimal(surd, digits),
        ratio=ratio,
        in_window=in_window,
    )


def build_sweep(
    k: int, t_min: Fraction, t_max: Fraction, steps: int, digits: int
) -> list[SweepRow]:
    """Rows at t_min + i (t_max - t_min)/steps for i = 0..steps; a single
    row at t_min when steps is 0."""
    if t_max < t_min:
        raise ArgumentError(f"t_max {t_max} is below t_min {t_min}")
    step = (t_max - t_min) / steps if steps else Fraction(0)
    return [sweep_row(k, t_min + i * step, digits) for i in range(steps + 1)]


def cmd_derive(options: dict, output: str, stream: TextIO) -> int:
    form = derive(options[OPT_ROOT])
    report = check_next_order(form)
    if output == OUTPUT_JSON:
        print(dump_json({"form": form, "next_order": report}), file=stream)
        return EXIT_OK
    print(form, file=stream)
    print(
        f"S = {form.a}*N + {form.b}*M/N^{form.k - 1}"
        f" + {form.c}*N*x/({form.d}*M + {form.e}*N^{form.k})",
        file=stream,
    )
    verdict = "consistent" if report.consistent else "inconsistent"
    print(
        f"next order: D/(D+E) = {report.actual_ratio}, "
        f"t^4 needs {report.required_ratio}: {verdict}",
        file=stream,
    )
    return EXIT_OK


def cmd_eval(options: dict, output: str, stream: TextIO) -> int:
    form = derive(options[OPT_ROOT])
    value = evaluate(form, options[OPT_N], options[OPT_X])
    if output == OUTPUT_JSON:
        print(dump_json({"form": form, "value": value}), file=stream)
        return EXIT_OK
    print(f"S = {format_rational(value)}", file=stream)
    print(f"  = {to_decimal(value, DEFAULT_DIGITS)}", file=stream)
    return EXIT_OK


def cmd_error(options: dict, output: str, stream: TextIO) -> int:
    form = derive(options[OPT_ROOT])
    digits = options[OPT_DIGITS]
    report = error_report(form, options[OPT_N], options[OPT_X], digits)
    if output == OUTPUT_JSON:
        print(dump_json(dump_error_report(report, digits)), file=stream)
        return EXIT_OK
    true = report.true_error
    enclosure = report.formula_enclosure
    print(
        f"N = {report.n_value}, x = {report.x_value}, "
        f"t = {report.x_value / report.n_value**form.k}",
        file=stream,
    )
    print(
        f"true error in [{to_decimal(true.lo, digits)}, "
        f"{to_decimal(true.hi, digits)}]",
        file=stream,
    )
    print(
        f"  ~ {to_scientific(true.midpoint(), FIGURE_DIGITS)}", file=stream
    )
    print(
        f"formula enclosure [{to_decimal(enclosure.lo, digits)}, "
        f"{to_decimal(enclosure.hi, digits)}]",
        file=stream,
    )
    print(
        f"bound |E| <= {to_scientific(report.bound, FIGURE_DIGITS)}",
        file=stream,
    )
    print(f"accurate places: {accurate_places(true)}", file=stream)
    proven = "yes" if report.overestimates else "not proven"
    print(f"overestimates: {proven}", file=stream)
    return EXIT_OK


def cmd_window(output: str, stream: TextIO) -> int:
    window = overestimate_window()
    if output == OUTPUT_JSON:
        print(dump_json(window), file=stream)
        return EXIT_OK
    print(
        f"lower = {window.lower} = "
        f"{to_decimal(window.lower, WINDOW_PLACES)}",
        file=stream,
    )
    print(
        f"upper in [{to_decimal(window.upper.lo, WINDOW_PLACES)}, "
        f"{to_decimal(window.upper.hi, WINDOW_PLACES)}]",
        file=stream,
    )
    return EXIT_OK


def cmd_bound(options: dict, output: str, stream: TextIO) -> int:
    bound = percent_bound(
        options[OPT_PERCENT], options[OPT_SIGN], options[OPT_DIGITS]
    )
    if output == OUTPUT_JSON:
        print(dump_json({"bound": bound}), file=stream)
        return EXIT_OK
    print(
        f"|E| < {to_scientific(bound.hi, FIGURE_DIGITS)} * N"
        f" <= N / {int(1 / bound.hi)}",
        file=stream,
    )
    return EXIT_OK


def cmd_verify_tripos(digits: int, output: str, stream: TextIO) -> int:
    verification = verify_tripos(digits)
    if output == OUTPUT_JSON:
        print(dump_json(dump_verification(verification, digits)), file=stream)
    else:
        print(f"S(1) = {format_rational(verification.fraction)}", file=stream)
        error = verification.true_error
        print(
            f"E in [{to_decimal(error.lo, digits)}, "
            f"{to_decimal(error.hi, digits)}]",
            file=stream,
        )
        print(f"bound = {to_decimal(verification.bound, digits)}", file=stream)
        for check in verification.checks:
            status = "PASS" if check.passed else "FAIL"
            print(f"{status} {check.name}: {check.detail}", file=stream)
        for note in verification.notes:
            print(f"note: {note}", file=stream)
        print("PASS" if verification.passed else "FAIL", file=stream)
    if not verification.passed:
        failed = [c.name for c in verification.checks if not c.passed]
        raise VerificationFailure(f"failed checks: {', '.join(failed)}")
    return EXIT_OK


def cmd_sweep(options: dict, output: str, stream: TextIO) -> int:
    rows = build_sweep(
        options[OPT_ROOT],
        options[OPT_T_MIN],
        options[OPT_T_MAX],
        options[OPT_STEPS],
        options[OPT_DIGITS],
    )
    if output == OUTPUT_JSON:
        print(dump_json([row.as_cells() for row in rows]), file=stream)
        return EXIT_OK
    writer = csv.DictWriter(
        stream,
        fieldnames=SWEEP_COLUMNS,
        lineterminator="\n",
    )
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_cells())
    return EXIT_OK


def _add_output(parser: argparse.ArgumentParser, csv_too=False) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--json",
        dest="output",
        action="store_const",
        const=OUTPUT_JSON,
        help="print JSON instead of text",
    )
    if csv_too:
        group.add_argument(
            "--csv",
            dest="output",
            action="store_const",
            const=OUTPUT_CSV,
            help="print CSV (the default)",
        )


def _add_digits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--digits",
        default=str(DEFAULT_DIGITS),
        help=f"decimal places shown (default {DEFAULT_DIGITS})",
    )


def _add_root(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-k",
        "--root",
        default=str(DEFAULT_ROOT),
        help=f"root index k >= 2 (default {DEFAULT_ROOT})",
    )


def _add_instance(parser: argparse.ArgumentParser) -> None:
    _add_root(parser)
    parser.add_argument("-n", "--n", required=True, help="N > 0")
    parser.add_argument("-x", "--x", required=True, help="x, M = N^k + x")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=NAME,
        description="Exact surd approximations of k-th roots and their "
        "rigorous error bounds.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="debug logging"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    derive_parser = commands.add_parser(
        "derive", help="derive the surd form for a root index"
    )
    _add_root(derive_parser)
    _add_output(derive_parser)

    eval_parser = commands.add_parser("eval", help="evaluate S exactly")
    _add_instance(eval_parser)
    _add_output(eval_parser)

    error_parser = commands.add_parser(
        "error", help="true error and its enclosure"
    )
    _add_instance(error_parser)
    _add_digits(error_parser)
    _add_output(error_parser)

    window_parser = commands.add_parser(
        "window", help="overestimation window of the fourth-root form"
    )
    _add_output(window_parser)

    bound_parser = commands.add_parser(
        "bound", help="per-N bound when |x| is below p%% of M or N^4"
    )
    bound_parser.add_argument("-p", "--percent", required=True)
    bound_parser.add_argument(
        "--sign", required=True, choices=[SIGN_POSITIVE, SIGN_NEGATIVE]
    )
    _add_digits(bound_parser)
    _add_output(bound_parser)

    verify_parser = commands.add_parser(
        "verify-tripos", help="reproduce the 1886 accuracy claim"
    )
    _add_digits(verify_parser)
    _add_output(verify_parser)

    sweep_parser = commands.add_parser(
        "sweep", help="CSV comparison of Taylor and surd errors"
    )
    _add_root(sweep_parser)
    sweep_parser.add_argument(
        "--t-min", required=True, help="first t; write --t-min=-1/10"
    )
    sweep_parser.add_argument("--t-max", required=True, help="last t")
    sweep_parser.add_argument("--steps", default="10")
    _add_digits(sweep_parser)
    _add_output(sweep_parser, csv_too=True)
    return parser


def _dispatch(args: argparse.Namespace, stream: TextIO) -> int:
    options = vars(args)
    output = args.output or OUTPUT_TEXT
    match args.command:
        case "derive":
            return cmd_derive(
                validate_options(DERIVE_SCHEMA, options), output, stream
            )
        case "eval":
            return cmd_eval(
                validate_options(EVAL_SCHEMA, options), output, stream
            )
        case "error":
            return cmd_error(
                validate_options(ERROR_SCHEMA, options), output, stream
            )
        case "window":
            return cmd_window(output, stream)
        case "bound":
            return cmd_bound(
                validate_options(BOUND_SCHEMA, options), output, stream
            )
        case "verify-tripos":
            digits = validate_options(VERIFY_SCHEMA, options)[OPT_DIGITS]
            return cmd_verify_tripos(digits, output, stream)
        case "sweep":
            return cmd_sweep(
                validate_options(SWEEP_SCHEMA, options), output, stream
            )
    raise ArgumentError(f"unknown command {args.command}")


def main(argv: list[str] | None = None, stream: TextIO | None = None) -> int:
    """Run one command.
    :param argv: arguments without the program name; sys.argv by default.
    :param stream: where results go; standard output by default.
    :returns: the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return _dispatch(args, sys.stdout if stream is None else stream)
    except VerificationFailure as ex:
        print(f"{NAME}: {ex}", file=sys.stderr)
        return EXIT_VERIFICATION_FAILED
    except (ArgumentError, DomainError) as ex:
        _LOGGER.debug("Command failed", exc_info=True)
        print(f"{NAME}: {ex}", file=sys.stderr)
        return EXIT_ARGUMENT_ERROR
