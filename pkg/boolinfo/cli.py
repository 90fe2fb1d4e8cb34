"""
Command Line Interface
======================

    python -m boolinfo analyze dictator:1@n=3 --alpha 0.25
    python -m boolinfo spectrum majority@n=3
    python -m boolinfo sweep --start 0 --end 0.5 --steps 101 --column conjectured --column theorem1
    python -m boolinfo verify conjecture --n 3 --scope all --grid 21
    python -m boolinfo moments --crossover --n 3 --alpha 0.25
    python -m boolinfo search --n 4 --scope balanced --grid 0.1,0.3

Data goes to stdout (or --out FILE), logs go to stderr.

Exit status:
    0  success / zero violations
    1  verification found violations
    2  usage error or any BoolinfoError (one line on stderr)
"""

import argparse
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from dotenv import load_dotenv

from boolinfo.analysis.bounds import (
    bound_report,
    conjectured_bound,
    general_t_bound,
    moment_bound,
    quadratic_bound,
    theorem1_bound,
)
from boolinfo.analysis.channel import conditional_entropy, moment_report, mutual_information
from boolinfo.analysis.hypercube import (
    fourier_transform,
    is_balanced,
    is_dictator,
    popcounts,
    weight_profile,
)
from boolinfo.core.errors import BoolinfoError, GridError, PremiseViolation
from boolinfo.core.logger import BoolinfoLogger, get_logger
from boolinfo.search.enumeration import FunctionClass, Scope
from boolinfo.search.experiments import DEFAULT_K_LIST, moment_crossover_experiment
from boolinfo.search.reports import SearchReport
from boolinfo.search.verification import (
    CHECKS,
    COROLLARY,
    HYPERCONTRACTIVITY,
    MOMENTS,
    TAYLOR,
    THEOREM1,
    search_maximizers,
    verify_conjecture,
    verify_corollary,
    verify_hypercontractivity,
    verify_moment_bounds,
    verify_sampled,
    verify_taylor,
    verify_theorem1,
)
from boolinfo.utils.function_spec import format_function_spec, parse_function_spec
from boolinfo.utils.grids import linspace_grid, parse_grid
from boolinfo.utils.output import open_sink, write_csv, write_json
from boolinfo.utils.random_utils import random_seed

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_ERROR = 2

PREMISE_NA = "n/a (premise)"
ANALYZE_MOMENT_K = 4


# ============================================================================
# SWEEP
# ============================================================================


@dataclass
class SweepConfig:
    """
    Grid plus columns for a bound table.

    Columns: conjectured | quadratic | theorem1 | general_t:T | moment:K | mi:SPEC
    """

    alpha_start: float = 0.0
    alpha_end: float = 0.5
    steps: int = 101
    columns: List[str] = field(default_factory=lambda: ["conjectured", "quadratic", "theorem1"])
    grid: Optional[List[float]] = None

    def alphas(self) -> List[float]:
        if self.grid is not None:
            return parse_grid(self.grid, interval=(self.alpha_start, self.alpha_end))
        return linspace_grid(self.alpha_start, self.alpha_end, self.steps)

    def evaluators(self) -> Dict[str, Callable[[float], float]]:
        """Column name -> alpha -> value; raises GridError on an unknown column."""
        evaluators: Dict[str, Callable[[float], float]] = {}
        for column in self.columns:
            name, _, argument = column.partition(":")
            if column in ("conjectured", "quadratic", "theorem1"):
                evaluators[column] = {"conjectured": conjectured_bound, "quadratic": quadratic_bound,
                                      "theorem1": theorem1_bound}[column]
            elif name == "general_t" and argument.isdigit():
                evaluators[column] = lambda a, t=int(argument): general_t_bound(a, t)
            elif name == "moment" and argument.isdigit():
                evaluators[column] = lambda a, k=int(argument): moment_bound(a, k)
            elif name == "mi" and argument:
                f = parse_function_spec(argument)
                evaluators[column] = lambda a, f=f: mutual_information(f, a)
            else:
                raise GridError(
                    f"unknown sweep column '{column}' "
                    f"(conjectured, quadratic, theorem1, general_t:T, moment:K, mi:SPEC)"
                )
        return evaluators


def run_sweep(config: SweepConfig) -> List[Dict[str, Optional[float]]]:
    """One row per alpha; None where a bound's premise fails."""
    evaluators = config.evaluators()
    rows = []
    for alpha in config.alphas():
        row: Dict[str, Optional[float]] = {"alpha": alpha}
        for column, evaluate in evaluators.items():
            try:
                row[column] = evaluate(alpha)
            except PremiseViolation:
                row[column] = None
        rows.append(row)
    return rows


# ============================================================================
# ANALYZE / SPECTRUM
# ============================================================================


def analyze_function(spec: str, alpha: float, k_max: int = ANALYZE_MOMENT_K) -> dict:
    """Everything `analyze` prints, as a dict."""
    f = parse_function_spec(spec)
    spectrum = fourier_transform(f)
    moments = moment_report(f, alpha, k_max)
    bounds = bound_report(alpha)
    mi = moments.mi_bits
    checks = {
        "conjectured": mi <= bounds.conjectured + 1e-12,
        "quadratic": mi <= bounds.quadratic + 1e-12,
    }
    if bounds.theorem1 is not None and is_balanced(f):
        checks["theorem1"] = mi <= bounds.theorem1 + 1e-12
    return {
        "spec": spec,
        "function": format_function_spec(f),
        "n": f.n,
        "balanced": is_balanced(f),
        "dictator": is_dictator(f),
        "weight_profile": list(weight_profile(spectrum)),
        "mi_bits": mi,
        "conditional_entropy": conditional_entropy(f, alpha),
        "moments": {str(k): value for k, value in moments.moments.items()},
        "bounds": bounds.to_dict(),
        "checks": checks,
    }


def spectrum_rows(spec: str, threshold: float = 1e-15) -> List[dict]:
    """Nonzero Fourier coefficients in mask order."""
    f = parse_function_spec(spec)
    coeffs = fourier_transform(f).coeffs
    sizes = popcounts(f.n)
    rows = []
    for mask, value in enumerate(coeffs):
        if abs(value) > threshold:
            subset = [j + 1 for j in range(f.n) if mask >> j & 1]
            rows.append({"mask": mask, "subset": "{" + ",".join(map(str, subset)) + "}",
                         "degree": int(sizes[mask]), "coefficient": float(value)})
    return rows


def _render_text(report: dict, stream) -> None:
    for key in ("function", "n", "balanced", "dictator", "weight_profile", "mi_bits", "conditional_entropy"):
        stream.write(f"{key}: {report[key]}\n")
    for k, value in report["moments"].items():
        stream.write(f"m{2 * int(k)}: {value!r}\n")
    bounds = report["bounds"]
    stream.write(f"alpha: {bounds['alpha']!r}\n")
    for name in ("conjectured", "quadratic", "theorem1"):
        value = bounds[name]
        stream.write(f"bound.{name}: {PREMISE_NA if value is None else repr(value)}\n")
    for group in ("general_t", "moment_bounds"):
        for key, value in bounds[group].items():
            stream.write(f"bound.{group}[{key}]: {PREMISE_NA if value is None else repr(value)}\n")
    for name, ok in report["checks"].items():
        stream.write(f"check.{name}: {'ok' if ok else 'VIOLATED'}\n")


# ============================================================================
# COMMANDS
# ============================================================================


def _ints(text: str) -> List[int]:
    try:
        return [int(token) for token in text.split(",") if token.strip()]
    except ValueError as e:
        raise GridError(f"expected a comma list of integers, got '{text}'") from e


def cmd_analyze(args) -> int:
    report = analyze_function(args.function, args.alpha)
    with open_sink(args.out) as stream:
        if args.format == "json":
            write_json(report, stream)
        elif args.format == "csv":
            flat = {k: v for k, v in report.items() if not isinstance(v, (dict, list))}
            flat.update({f"m{2 * int(k)}": v for k, v in report["moments"].items()})
            flat.update({name: report["bounds"][name] for name in ("conjectured", "quadratic", "theorem1")})
            write_csv([flat], list(flat), stream)
        else:
            _render_text(report, stream)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    rows = spectrum_rows(args.function)
    with open_sink(args.out) as stream:
        if args.format == "json":
            write_json({"function": format_function_spec(parse_function_spec(args.function)),
                        "coefficients": rows}, stream)
        else:
            write_csv(rows, ["mask", "subset", "degree", "coefficient"], stream)
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = SweepConfig(
        alpha_start=args.start,
        alpha_end=args.end,
        steps=args.steps,
        columns=args.column or ["conjectured", "quadratic", "theorem1"],
        grid=args.grid,
    )
    rows = run_sweep(config)
    with open_sink(args.out) as stream:
        if args.format == "json":
            write_json(rows, stream)
        else:
            write_csv(rows, ["alpha"] + list(config.columns), stream)
    return EXIT_OK


def _emit_report(report: SearchReport, args) -> int:
    with open_sink(args.out) as stream:
        if args.format == "csv":
            rows = [{
                "point": label,
                "max_value": report.max_values[label],
                "maximizer_count": report.maximizer_counts[label],
                "min_margin": report.min_margin[label],
            } for label in report.points]
            write_csv(rows, ["point", "max_value", "maximizer_count", "min_margin"], stream)
        else:
            write_json(report.to_dict(), stream)
    if report.passed:
        logger.info(f"✅ {report.check}: verified ({report.checked_count:,} evaluations)")
        return EXIT_OK
    logger.error(f"❌ {report.check}: {report.violation_count} violation(s)")
    return EXIT_VIOLATIONS


def cmd_verify(args) -> int:
    check = args.check
    if check == TAYLOR:
        report = verify_taylor(points=args.points, t_max=args.t_max)
    elif check == HYPERCONTRACTIVITY:
        seed = args.seed if args.seed is not None else random_seed()
        logger.info(f"🎲 seed={seed}")
        report = verify_hypercontractivity(samples=args.samples or 10_000, n_values=_ints(args.n_values),
                                           q_values=[float(q) for q in args.q_values.split(",")], seed=seed)
    elif args.samples:
        seed = args.seed if args.seed is not None else random_seed()
        logger.info(f"🎲 seed={seed}")
        report = verify_sampled(check, args.n, args.samples, args.grid, seed, k_set=_ints(args.k))
    else:
        if check != "conjecture" and args.scope == Scope.ALL.value:
            logger.warning(f"⚠️  {check} applies to balanced functions; using scope=balanced")
        if check == THEOREM1:
            report = verify_theorem1(args.n, args.grid, large=args.large, threads=args.threads)
        elif check == MOMENTS:
            report = verify_moment_bounds(args.n, args.grid, _ints(args.k), large=args.large,
                                          threads=args.threads, skip_invalid=args.skip_invalid)
        elif check == COROLLARY:
            report = verify_corollary(args.n, args.grid, large=args.large, threads=args.threads)
        else:
            cls = FunctionClass(args.n, Scope(args.scope), args.large)
            report = verify_conjecture(cls, args.grid, threads=args.threads)
    return _emit_report(report, args)


def cmd_moments(args) -> int:
    if args.crossover:
        table = moment_crossover_experiment(args.n, _ints(args.k) if args.k else DEFAULT_K_LIST, args.alpha)
        with open_sink(args.out) as stream:
            if args.format == "csv":
                rows = [row.to_dict() for row in table.rows]
                write_csv(rows, list(rows[0]) if rows else ["k"], stream)
            else:
                write_json(table.to_dict(), stream)
        return EXIT_OK

    if not args.function:
        raise GridError("moments needs a function spec or --crossover")
    f = parse_function_spec(args.function)
    report = moment_report(f, args.alpha, args.k_max)
    with open_sink(args.out) as stream:
        if args.format == "csv":
            rows = [{"k": k, "moment": value} for k, value in sorted(report.moments.items())]
            write_csv(rows, ["k", "moment"], stream)
        else:
            write_json(dict(report.to_dict(), function=format_function_spec(f)), stream)
    return EXIT_OK


def cmd_search(args) -> int:
    if args.samples:
        seed = args.seed if args.seed is not None else random_seed()
        report = verify_sampled("search", args.n, args.samples, args.grid, seed)
    else:
        report = search_maximizers(FunctionClass(args.n, Scope(args.scope), args.large), args.grid,
                                   threads=args.threads)
    return _emit_report(report, args)


# ============================================================================
# PARSER
# ============================================================================


def _global_flags() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--alpha", type=float, default=0.25, help="crossover probability (default 0.25)")
    parent.add_argument("--grid", default=None, help="alpha grid: point count or comma list")
    parent.add_argument("--format", choices=("text", "csv", "json"), default=None)
    parent.add_argument("--out", default=None, help="output file (default stdout)")
    parent.add_argument("--seed", type=int, default=None)
    parent.add_argument("--large", action="store_true", help="allow n=5 balanced enumeration")
    parent.add_argument("--threads", type=int, default=None, help="worker processes")
    parent.add_argument("--log-level", default=None, help="DEBUG | INFO | WARNING | ERROR")
    return parent


def build_parser() -> argparse.ArgumentParser:
    parent = _global_flags()
    parser = argparse.ArgumentParser(prog="boolinfo",
                                     description="Exact information measures of Boolean functions over BSC(alpha).")
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[parent], help="report for one function")
    analyze.add_argument("function")
    analyze.set_defaults(handler=cmd_analyze, default_format="text")

    spectrum = sub.add_parser("spectrum", parents=[parent], help="Fourier coefficients")
    spectrum.add_argument("function")
    spectrum.set_defaults(handler=cmd_spectrum, default_format="csv")

    sweep = sub.add_parser("sweep", parents=[parent], help="bound table over an alpha grid")
    sweep.add_argument("--start", type=float, default=0.0)
    sweep.add_argument("--end", type=float, default=0.5)
    sweep.add_argument("--steps", type=int, default=101)
    sweep.add_argument("--column", action="append", default=None,
                       help="conjectured | quadratic | theorem1 | general_t:T | moment:K | mi:SPEC (repeatable)")
    sweep.set_defaults(handler=cmd_sweep, default_format="csv")

    verify = sub.add_parser("verify", parents=[parent], help="exhaustive or sampled verification")
    verify.add_argument("check", choices=CHECKS)
    verify.add_argument("--n", type=int, default=3)
    verify.add_argument("--scope", choices=[s.value for s in Scope], default=Scope.BALANCED.value)
    verify.add_argument("--k", default="1", help="moment orders, comma list (moments check)")
    verify.add_argument("--skip-invalid", action="store_true", help="drop (alpha, k) pairs outside the premise")
    verify.add_argument("--samples", type=int, default=None, help="random balanced functions instead of all")
    verify.add_argument("--points", type=int, default=2001, help="p grid size (taylor)")
    verify.add_argument("--t-max", type=int, default=5, help="largest order (taylor)")
    verify.add_argument("--n-values", default="2,3,4", help="bit counts (hypercontractivity)")
    verify.add_argument("--q-values", default="4,6", help="norm exponents (hypercontractivity)")
    verify.set_defaults(handler=cmd_verify, default_format="json")

    moments = sub.add_parser("moments", parents=[parent], help="even moments or the majority/dictator crossover")
    moments.add_argument("function", nargs="?")
    moments.add_argument("--k-max", type=int, default=ANALYZE_MOMENT_K)
    moments.add_argument("--crossover", action="store_true")
    moments.add_argument("--n", type=int, default=3)
    moments.add_argument("--k", default=None, help="k list for --crossover")
    moments.set_defaults(handler=cmd_moments, default_format="json")

    search = sub.add_parser("search", parents=[parent], help="per-alpha MI maximizers")
    search.add_argument("--n", type=int, default=3)
    search.add_argument("--scope", choices=[s.value for s in Scope], default=Scope.BALANCED.value)
    search.add_argument("--samples", type=int, default=None)
    search.set_defaults(handler=cmd_search, default_format="json")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    load_dotenv()
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.log_level:
        BoolinfoLogger.reset()
        BoolinfoLogger.configure(log_level=args.log_level)
    else:
        BoolinfoLogger.configure_from_environment()
    args.format = args.format or args.default_format
    try:
        return args.handler(args)
    except BoolinfoError as e:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"boolinfo: error: {e}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
