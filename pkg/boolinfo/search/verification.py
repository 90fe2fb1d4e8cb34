"""
Verification Runs
=================

Exhaustive and sampled checks of the information bounds against exact values.

Scan checks (every function of a class at every grid point):
    conjecture   I(f(X); Y) <= 1 - h(alpha)                     all or balanced
    theorem1     I(f(X); Y) <= theorem1_bound(alpha)             balanced
    moments      M_2k <= (2k-1)^k (1 - 2 alpha)^2k               balanced
    corollary    non-dictators strictly below 1 - h(alpha),
                 dictators equal to it                           balanced
    search       per-point MI maximizers only

Property checks (no function class):
    taylor             entropy Taylor lower bound below h, nondecreasing in t
    hypercontractivity ||T_rho g||_q <= ||g||_2 at rho = sqrt(1/(q-1))

Violations never raise; they are recorded in the SearchReport. Grid points
outside a bound's premise do raise PremiseViolation before any scan starts.
"""

import math
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import allure
import numpy as np

from boolinfo.analysis.bounds import (
    conjectured_bound,
    corollary_threshold,
    moment_bound,
    moment_premise,
    nondictator_mi_bound,
    theorem1_bound,
)
from boolinfo.analysis.channel import LOG2_E, entropy_of_deviation, entropy_taylor_lower_bound
from boolinfo.analysis.hypercube import noise_array, spectrum_array
from boolinfo.core.env_config import get_environment_config
from boolinfo.core.errors import GridError, PremiseViolation
from boolinfo.core.logger import get_logger, step_aware_loggerAttach, step_aware_loggerStep
from boolinfo.search.batch import (
    CONJECTURE,
    COROLLARY,
    MOMENTS,
    SEARCH,
    THEOREM1,
    ScanTask,
    evaluate_tables,
)
from boolinfo.search.enumeration import FunctionClass, Scope
from boolinfo.search.parallel import default_checkpoint_path, run_scan
from boolinfo.search.reports import (
    PartialReport,
    PointSummary,
    ScanPoint,
    SearchReport,
    Violation,
    build_report,
)
from boolinfo.utils.grids import parse_grid
from boolinfo.utils.output import to_json
from boolinfo.utils.random_utils import make_rng, random_balanced
from boolinfo.utils.truth_table import format_hex

logger = get_logger(__name__)

TAYLOR = "taylor"
HYPERCONTRACTIVITY = "hypercontractivity"
CHECKS = (CONJECTURE, THEOREM1, MOMENTS, COROLLARY, TAYLOR, HYPERCONTRACTIVITY)


def _task(check: str, cls: Optional[FunctionClass], points: Sequence[ScanPoint], rhs) -> ScanTask:
    config = get_environment_config()
    return ScanTask(
        check=check,
        function_class=cls,
        points=tuple(points),
        rhs=tuple(rhs),
        tolerance=config.bound_tolerance,
        strict_margin=config.strict_margin,
        max_maximizers=config.max_recorded_maximizers,
        max_violations=config.max_recorded_violations,
    )


def _hex_renderer(n: int):
    return lambda pattern: f"{n}:{format_hex(n, pattern)}"


def _scan(check: str, cls: FunctionClass, points: List[ScanPoint], rhs: list, alpha_grid: Sequence[float],
          threads: Optional[int], checkpoint_path: Optional[Path], extra: Optional[dict] = None) -> SearchReport:
    config = get_environment_config()
    task = _task(check, cls, points, rhs)
    if checkpoint_path is None and cls.large:
        checkpoint_path = default_checkpoint_path(task, config.chunk_size)
    with step_aware_loggerStep(f"Scan {check} over {cls.label} at {len(points)} point(s)"):
        partial = run_scan(task, threads=threads, checkpoint_path=checkpoint_path)
    return build_report(check, cls.to_dict(), alpha_grid, points, partial, config.bound_tolerance,
                        format_pattern=_hex_renderer(cls.n), extra=extra)


def _attach_report(report: SearchReport) -> SearchReport:
    """Attach the JSON report to the active step and log the outcome."""
    outcome = "passed" if report.passed else f"{report.violation_count} violation(s)"
    logger.info(f"📋 {report.check}: {report.checked_count:,} evaluations, {outcome}")
    step_aware_loggerAttach(to_json(report.to_dict()), name=f"{report.check}_report",
                            attachment_type=allure.attachment_type.JSON)
    return report


def _balanced(cls_or_n, large: bool) -> FunctionClass:
    if isinstance(cls_or_n, FunctionClass):
        if cls_or_n.scope is not Scope.BALANCED:
            raise GridError(f"this check applies to balanced functions only, got scope={cls_or_n.scope.value}")
        return cls_or_n
    return FunctionClass(cls_or_n, Scope.BALANCED, large)


# ============================================================================
# SCAN CHECKS
# ============================================================================


def verify_conjecture(cls: FunctionClass, alpha_grid=None, threads: Optional[int] = None,
                      checkpoint_path: Optional[Path] = None) -> SearchReport:
    """MI(f, alpha) <= 1 - h(alpha) + tolerance for every f in cls; records per-alpha maximizers."""
    grid = parse_grid(alpha_grid, CONJECTURE)
    points = [ScanPoint.for_alpha(a) for a in grid]
    return _attach_report(_scan(CONJECTURE, cls, points, [conjectured_bound(a) for a in grid], grid, threads,
                                checkpoint_path))


def verify_theorem1(n, alpha_grid=None, large: bool = False, threads: Optional[int] = None,
                    checkpoint_path: Optional[Path] = None) -> SearchReport:
    """
    MI(f, alpha) <= theorem1_bound(alpha) + tolerance for every balanced f.

    Raises:
        PremiseViolation: a grid point below (1 - 1/sqrt 3)/2
    """
    cls = _balanced(n, large)
    grid = parse_grid(alpha_grid, THEOREM1)
    rhs = [theorem1_bound(a) for a in grid]
    points = [ScanPoint.for_alpha(a) for a in grid]
    return _attach_report(_scan(THEOREM1, cls, points, rhs, grid, threads, checkpoint_path))


def verify_moment_bounds(n, alpha_grid=None, k_set: Iterable[int] = (1,), large: bool = False,
                         threads: Optional[int] = None, skip_invalid: bool = False,
                         checkpoint_path: Optional[Path] = None) -> SearchReport:
    """
    M_2k(f, alpha) <= (2k-1)^k (1-2 alpha)^2k + tolerance for every balanced f.

    Args:
        skip_invalid: drop (alpha, k) pairs outside the premise instead of raising

    Raises:
        PremiseViolation: a pair with (1 - 2 alpha) sqrt(2k - 1) > 1 and skip_invalid False
    """
    cls = _balanced(n, large)
    grid = parse_grid(alpha_grid, MOMENTS)
    points, rhs, skipped = [], [], []
    for a in grid:
        for k in k_set:
            if not moment_premise(a, k):
                if not skip_invalid:
                    raise PremiseViolation("moment_bound", a, f"(1-2*alpha)*sqrt({2 * k - 1}) <= 1 for k={k}")
                skipped.append({"alpha": a, "k": k})
                continue
            points.append(ScanPoint.for_moment(a, k))
            rhs.append(moment_bound(a, k))
    if skipped:
        logger.info(f"⏭️  Skipped {len(skipped)} (alpha, k) pair(s) outside the moment premise")
    if not points:
        raise GridError("no (alpha, k) pair satisfies the moment premise")
    return _attach_report(_scan(MOMENTS, cls, points, rhs, grid, threads, checkpoint_path,
                                extra={"skipped_pairs": skipped} if skipped else None))


def verify_corollary(n, alpha_grid=None, large: bool = False, threads: Optional[int] = None,
                     checkpoint_path: Optional[Path] = None) -> SearchReport:
    """
    In the window [1/2 - 2^-n/4, 1/2): every balanced non-dictator has MI below
    1 - h(alpha) by more than strict_margin, every dictator matches it within
    tolerance, and nondictator_mi_bound(alpha, n) < (log2(e)/2)(1 - 2 alpha)^2.
    """
    cls = _balanced(n, large)
    grid = parse_grid(11 if alpha_grid is None else alpha_grid, COROLLARY, n=cls.n)
    window = corollary_threshold(cls.n)
    for a in grid:
        if not 0.5 - window <= a < 0.5:
            raise GridError(f"alpha {a!r} outside the window [{0.5 - window!r}, 0.5)")
    points = [ScanPoint.for_alpha(a) for a in grid]
    report = _scan(COROLLARY, cls, points, [conjectured_bound(a) for a in grid], grid, threads, checkpoint_path)

    c = LOG2_E / 2.0
    config = get_environment_config()
    for point in points:
        rho = 1.0 - 2.0 * point.alpha
        chain_lhs = nondictator_mi_bound(point.alpha, cls.n)
        chain_rhs = c * rho * rho
        if not chain_lhs < chain_rhs:
            report.violation_count += 1
            if len(report.violations) < config.max_recorded_violations:
                report.violations.append(Violation("corollary_chain", point.label, chain_lhs, chain_rhs,
                                                   alpha=point.alpha))
    return _attach_report(report)


def search_maximizers(cls: FunctionClass, alpha_grid=None, threads: Optional[int] = None,
                      checkpoint_path: Optional[Path] = None) -> SearchReport:
    """Per-alpha MI maximizers over cls (no bound is checked)."""
    grid = parse_grid(alpha_grid, SEARCH)
    points = [ScanPoint.for_alpha(a) for a in grid]
    return _attach_report(_scan(SEARCH, cls, points, [None] * len(points), grid, threads, checkpoint_path))


def verify_sampled(check: str, n: int, samples: int, alpha_grid=None, seed=None,
                   k_set: Iterable[int] = (1,)) -> SearchReport:
    """
    Scan check over random balanced functions instead of a full class.

    Duplicated draws are evaluated once; extra records samples and distinct.
    """
    if check not in (CONJECTURE, THEOREM1, MOMENTS, SEARCH):
        raise GridError(f"sampled runs support conjecture, theorem1, moments and search, not {check}")
    grid = parse_grid(alpha_grid, check)
    if check == MOMENTS:
        points = [ScanPoint.for_moment(a, k) for a in grid for k in k_set]
        rhs = [moment_bound(p.alpha, p.k) for p in points]
    else:
        points = [ScanPoint.for_alpha(a) for a in grid]
        bound = {CONJECTURE: conjectured_bound, THEOREM1: theorem1_bound}.get(check)
        rhs = [bound(a) if bound else None for a in grid]

    rng = make_rng(seed)
    drawn = {}
    for _ in range(samples):
        f = random_balanced(n, rng)
        drawn.setdefault(f.to_int(), f.table)
    patterns = sorted(drawn)
    tables = np.stack([drawn[p] for p in patterns])
    logger.info(f"🎲 Sampled {samples:,} balanced functions at n={n} ({len(patterns):,} distinct)")

    task = _task(check, None, points, rhs)
    with step_aware_loggerStep(f"Scan {check} over {len(patterns):,} sampled functions at n={n}"):
        partial = evaluate_tables(task, n, patterns, tables)
    config = get_environment_config()
    return _attach_report(build_report(check, {"n": n, "scope": Scope.BALANCED.value, "sampled": samples},
                                       grid, points, partial, config.bound_tolerance,
                                       format_pattern=_hex_renderer(n),
                                       extra={"samples": samples, "distinct": len(patterns)}))


# ============================================================================
# PROPERTY CHECKS
# ============================================================================


def verify_taylor(points: int = 2001, t_max: int = 5) -> SearchReport:
    """
    For p on an evenly spaced grid of [-1, 1] and t = 1..t_max:
    lower(p, t) <= h((1-p)/2) and lower(p, t) >= lower(p, t-1).
    """
    config = get_environment_config()
    tolerance = config.bound_tolerance
    grid = np.linspace(-1.0, 1.0, points)
    entropy = entropy_of_deviation(grid)
    partial = PartialReport()
    labels = [ScanPoint(label=f"t={t}") for t in range(1, t_max + 1)]
    previous = None

    with step_aware_loggerStep(f"Check entropy Taylor bounds t=1..{t_max} on {points} points"):
        for point, t in zip(labels, range(1, t_max + 1)):
            lower = np.array([entropy_taylor_lower_bound(float(p), t) for p in grid])
            margins = entropy - lower
            bad = list(np.flatnonzero(margins < -tolerance))
            if previous is not None:
                bad_monotone = np.flatnonzero(lower < previous - tolerance)
            else:
                bad_monotone = np.array([], dtype=np.int64)
            for i in bad:
                _record(partial, Violation(TAYLOR, point.label, float(lower[i]), float(entropy[i])), config)
            for i in bad_monotone:
                _record(partial, Violation(f"{TAYLOR}_monotone", point.label, float(previous[i]), float(lower[i])),
                        config)
            partial.points[point.label] = PointSummary(
                max_value=float(lower.max()), min_margin=float(margins.min()), checked=int(grid.size),
            )
            previous = lower

    return _attach_report(build_report(TAYLOR, None, [], labels, partial, tolerance,
                                       extra={"p_points": points, "t_max": t_max}))


def verify_hypercontractivity(samples: int = 10_000, n_values: Iterable[int] = (2, 3, 4),
                              q_values: Iterable[float] = (4.0, 6.0), p: float = 2.0,
                              seed=None) -> SearchReport:
    """
    ||T_rho g||_q <= ||g||_p for standard normal tables g at rho = sqrt((p-1)/(q-1)).

    max_values holds the largest ratio lhs / rhs seen at each (n, q).
    """
    config = get_environment_config()
    tolerance = config.bound_tolerance
    rng = make_rng(seed)
    partial = PartialReport()
    labels = []

    with step_aware_loggerStep(f"Check hypercontractivity on {samples:,} Gaussian tables per (n, q)"):
        for n in n_values:
            for q in q_values:
                q = float(q)
                rho = math.sqrt((p - 1.0) / (q - 1.0))
                point = ScanPoint(label=f"n={n},q={q:g}")
                labels.append(point)
                tables = rng.standard_normal((samples, 1 << n))
                smoothed = noise_array(spectrum_array(tables, n), rho, n)
                lhs = np.mean(np.abs(smoothed) ** q, axis=-1) ** (1.0 / q)
                rhs = np.mean(np.abs(tables) ** p, axis=-1) ** (1.0 / p)
                margins = rhs - lhs
                for i in np.flatnonzero(lhs > rhs + tolerance):
                    _record(partial, Violation(HYPERCONTRACTIVITY, point.label, float(lhs[i]), float(rhs[i])),
                            config)
                partial.points[point.label] = PointSummary(
                    max_value=float(np.max(lhs / rhs)), min_margin=float(margins.min()), checked=samples,
                )

    return _attach_report(build_report(HYPERCONTRACTIVITY, None, [], labels, partial, tolerance,
                                       extra={"samples": samples, "p": p}))


def _record(partial: PartialReport, violation: Violation, config) -> None:
    partial.violation_count += 1
    if len(partial.violations) < config.max_recorded_violations:
        partial.violations.append(violation)
