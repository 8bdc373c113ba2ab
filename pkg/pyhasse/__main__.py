"""Implementation of module for command line.

The module can be tested by running the following command:
`python3 -m pyhasse check-curve --x0 137`
Use `python3 -m pyhasse -h` for full usage information.
"""
from __future__ import annotations

import argparse
import sys

from .configuration import Configuration
from .constants import (
    CONF_CLASS_NUMBER_BUDGET,
    CONF_OUTPUT,
    CONF_OUTPUT_FORMAT,
    CONF_WORKERS,
    EXIT_HYPOTHESIS,
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_USAGE,
    FORMAT_JSON,
    FORMAT_TABLE,
    HYPOTHESIS_ITEMS,
    LARGEST_LOW_GENUS_PLUS_LEVEL,
    OUTPUT_FORMATS,
)
from .curves import (
    ShimuraDescriptor,
    low_genus_plus_levels,
    scan_d0,
    shimura_invariants,
    x0_genus,
    x0_invariants,
    x0_plus_genus,
)
from .exceptions import (
    HypothesisFailure,
    InternalConsistencyError,
    InvalidParameterError,
    PyHasseInputError,
)
from .helpers import canonical_json, render_rows
from .logging import _LOGGER, enable_logging, level_for_verbosity
from .ntheory import class_number_budget, primes_in_range
from .twistcert import (
    CurveDescriptor,
    Variant,
    build_conditions,
    certify,
    check_hypotheses,
    density_lower_bound,
    expected_prime_count,
    require_hypotheses,
    shih_classify,
    to_json,
)

SCAN_PLUS_GENUS = "plus-genus"
SCAN_D0 = "d0"
SCAN_SHIH = "shih"


class _ArgumentParser(argparse.ArgumentParser):
    """Argument parser that exits with the usage error code."""

    def error(self, message):
        """Print usage and exit with EXIT_USAGE."""
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _decimal(text: str) -> int:
    """Parse a nonnegative decimal integer."""
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"{text!r} is not a decimal integer")
    return int(text)


def _build_parser() -> argparse.ArgumentParser:
    """Return the command line parser."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS)
    common.add_argument("--out", dest="output")
    common.add_argument("--budget", type=_decimal)
    common.add_argument("-v", "--verbose", action="count", default=0)

    curve = argparse.ArgumentParser(add_help=False)
    target = curve.add_mutually_exclusive_group(required=True)
    target.add_argument("--x0", type=_decimal, metavar="N")
    target.add_argument("--xd", type=_decimal, metavar="D")
    curve.add_argument("--q", type=_decimal)

    variant = argparse.ArgumentParser(add_help=False)
    variant.add_argument(
        "--variant", choices=[item.value for item in Variant], default=Variant.SPLIT.value
    )

    parser = _ArgumentParser(prog=__package__)
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("check-curve", parents=[common, curve])
    twists = commands.add_parser("find-twists", parents=[common, curve, variant])
    twists.add_argument("--bound", type=_decimal, required=True)
    twists.add_argument("--workers", type=_decimal)
    commands.add_parser("density", parents=[common, curve, variant])
    scan = commands.add_parser("scan", parents=[common])
    scan.add_argument("kind", choices=[SCAN_PLUS_GENUS, SCAN_D0, SCAN_SHIH])
    scan.add_argument("--limit", type=_decimal)
    scan.add_argument("--n", type=_decimal)
    scan.add_argument("--pmax", type=_decimal)
    commands.add_parser("invariants", parents=[common, curve])
    return parser


def _descriptor(args) -> CurveDescriptor:
    """Return the curve named by --x0 or --xd/--q."""
    if args.x0 is not None:
        if args.q is not None:
            raise InvalidParameterError("--q applies only with --xd")
        return CurveDescriptor.x0(args.x0)
    if args.q is None:
        raise InvalidParameterError("--xd needs --q")
    return CurveDescriptor.xd_plus(args.xd, args.q)


def cmd_check_curve(args) -> tuple[str, int]:
    """Render the hypothesis report."""
    report = check_hypotheses(_descriptor(args))
    code = EXIT_OK if report.passed else EXIT_HYPOTHESIS
    if args.config.output_format == FORMAT_JSON:
        return canonical_json(report), code
    held = (
        report.h1_no_rational_fixed,
        report.h2_geometric_fixed,
        report.h3_local_points.value,
        report.h4_quotient_finite,
    )
    details = (
        report.h1_justification,
        f"{report.fixed_points} fixed points",
        "points everywhere locally",
        f"quotient genus {report.quotient_genus}",
    )
    rows = zip(HYPOTHESIS_ITEMS, held, details)
    return render_rows(("item", "holds", "detail"), rows, args.config.output_format), code


def cmd_find_twists(args) -> tuple[str, int]:
    """Run certify and render the certificate."""
    cert = certify(
        _descriptor(args),
        variant=args.variant,
        bound=args.bound,
        workers=args.config.workers,
    )
    if args.config.output_format == FORMAT_JSON:
        return to_json(cert), EXIT_OK
    rows = [
        (trace.prime, trace.prime % 8, trace.splitting_ok, *(trace.witness or ("", "")))
        for trace in cert.primes_found
    ]
    table = render_rows(
        ("p", "p_mod_8", "splitting", "witness_x", "witness_y"), rows, args.config.output_format
    )
    if args.config.output_format != FORMAT_TABLE:
        return table, EXIT_OK
    header = [
        f"curve: {cert.descriptor}",
        f"variant: {cert.conditions.variant.value}, M = {cert.conditions.weil_threshold_M}",
        f"density >= {cert.density_lower_bound}",
        *(f"caveat: {caveat}" for caveat in cert.caveats),
        "",
    ]
    return "\n".join(header) + table, EXIT_OK


def cmd_density(args) -> tuple[str, int]:
    """Render the density lower bound of the condition set."""
    desc = _descriptor(args)
    report = require_hypotheses(desc)
    conds = build_conditions(desc, Variant(args.variant))
    density = density_lower_bound(conds, report.cm_class_number)
    row = (
        str(desc),
        conds.variant.value,
        conds.weil_threshold_M,
        conds.unramified_count,
        report.cm_class_number,
        str(density),
    )
    headers = ("curve", "variant", "M", "k", "h", "density")
    if args.config.output_format == FORMAT_JSON:
        return (
            canonical_json(
                {
                    "descriptor": desc,
                    "conditions": conds,
                    "density": density,
                    "class_number": report.cm_class_number,
                }
            ),
            EXIT_OK,
        )
    return render_rows(headers, [row], args.config.output_format), EXIT_OK


def _require(value: int | None, flag: str) -> int:
    """Return value or raise a usage error naming flag."""
    if value is None:
        raise InvalidParameterError(f"scan needs {flag}")
    return value


def cmd_scan(args) -> tuple[str, int]:
    """Tabulate a level or discriminant scan."""
    fmt = args.config.output_format
    if args.kind == SCAN_PLUS_GENUS:
        limit = _require(args.limit, "--limit")
        levels = low_genus_plus_levels(limit)
        if limit >= LARGEST_LOW_GENUS_PLUS_LEVEL and levels[-1] != LARGEST_LOW_GENUS_PLUS_LEVEL:
            raise InternalConsistencyError(
                f"Largest level with genus(X0+) <= 1 is {levels[-1]}, expected 131"
            )
        rows = [(level, x0_genus(level), x0_plus_genus(level)) for level in levels]
        return render_rows(("N", "genus", "genus_plus"), rows, fmt), EXIT_OK
    if args.kind == SCAN_D0:
        limit = _require(args.limit, "--limit")
        return render_rows(("limit", "D0"), [(limit, scan_d0(limit))], fmt), EXIT_OK

    level = _require(args.n, "--n")
    pmax = _require(args.pmax, "--pmax")
    reports = [
        shih_classify(level, p) for p in primes_in_range(3, max(pmax, 3)) if level % p
    ]
    rows = [
        (
            report.N,
            report.p,
            report.twist_parameter,
            report.shih_applicable,
            report.genus_class,
            report.local_obstruction.value if report.local_obstruction else "",
            report.obstruction_place or "",
            report.status.value,
        )
        for report in reports
    ]
    headers = ("N", "p", "p_star", "applicable", "genus_class", "local", "place", "status")
    return render_rows(headers, rows, fmt), EXIT_OK


def cmd_invariants(args) -> tuple[str, int]:
    """Dump the invariants of X0(N) or X^D."""
    if args.x0 is not None:
        invariants = x0_invariants(args.x0)
    else:
        invariants = shimura_invariants(ShimuraDescriptor(args.xd, args.q))
    if args.config.output_format == FORMAT_JSON:
        return canonical_json(invariants), EXIT_OK
    rows = invariants.to_dict().items()
    return render_rows(("invariant", "value"), rows, args.config.output_format), EXIT_OK


COMMANDS = {
    "check-curve": cmd_check_curve,
    "find-twists": cmd_find_twists,
    "density": cmd_density,
    "scan": cmd_scan,
    "invariants": cmd_invariants,
}


def _write(text: str, path: str | None) -> None:
    """Write text to path or standard output."""
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return its exit code."""
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE

    enable_logging(level_for_verbosity(args.verbose))

    try:
        args.config = Configuration(
            {
                CONF_WORKERS: getattr(args, "workers", None),
                CONF_CLASS_NUMBER_BUDGET: args.budget,
                CONF_OUTPUT_FORMAT: args.output_format,
                CONF_OUTPUT: args.output,
            }
        )
        with class_number_budget(args.config.class_number_budget):
            text, code = COMMANDS[args.command](args)
        _write(text, args.config.output)
    except HypothesisFailure as err:
        _LOGGER.error("%s", err)
        return EXIT_HYPOTHESIS
    except PyHasseInputError as err:
        _LOGGER.error("Invalid input: %s", err)
        return EXIT_USAGE
    except OSError as err:
        _LOGGER.error("Cannot write %s: %s", args.output, err)
        return EXIT_USAGE
    except InternalConsistencyError as err:
        _LOGGER.error("Internal consistency check failed: %s", err)
        return EXIT_INTERNAL
    return code


if __name__ == "__main__":
    sys.exit(main())
