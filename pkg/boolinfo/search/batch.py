"""
Batch Evaluation
================

Evaluates one rank range of a function class at every scan point.

The range is turned into an int8 table block of shape (B, 2^n), transformed
once, and every quantity is computed with the same array helpers that the
single-function API uses (boolinfo.analysis.channel), so a scan reports
exactly the values mutual_information / even_moment return for one function.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from boolinfo.analysis.channel import even_moments_array, mutual_information_array
from boolinfo.analysis.hypercube import noise_array, spectrum_array
from boolinfo.core.logger import get_logger
from boolinfo.search.enumeration import FunctionClass, iter_truth_table_ints
from boolinfo.search.reports import PartialReport, PointSummary, ScanPoint, Violation
from boolinfo.utils.truth_table import format_hex, tables_from_ints

logger = get_logger(__name__)

# Scan kinds. "search" records maximizers only.
CONJECTURE = "conjecture"
THEOREM1 = "theorem1"
MOMENTS = "moments"
COROLLARY = "corollary"
SEARCH = "search"
SCAN_CHECKS = (CONJECTURE, THEOREM1, MOMENTS, COROLLARY, SEARCH)


@dataclass(frozen=True)
class ScanTask:
    """Immutable scan configuration shipped to every worker (function_class is None for sampled runs)."""

    check: str
    function_class: Optional[FunctionClass]
    points: Tuple[ScanPoint, ...]
    rhs: Tuple[Optional[float], ...]
    tolerance: float
    strict_margin: float
    max_maximizers: int
    max_violations: int

    def fingerprint_payload(self) -> dict:
        return {
            "check": self.check,
            "class": self.function_class.to_dict() if self.function_class else None,
            "points": [p.label for p in self.points],
            "rhs": [repr(r) for r in self.rhs],
            "tolerance": repr(self.tolerance),
            "strict_margin": repr(self.strict_margin),
        }


def dictator_mask(spectra: np.ndarray, n: int) -> np.ndarray:
    """Rows whose spectrum is +-1 on one singleton (exact: coefficients are dyadic)."""
    singletons = [1 << j for j in range(n)]
    return np.any(np.abs(spectra[:, singletons]) == 1.0, axis=1)


def _summarize(patterns: np.ndarray, values: np.ndarray, margins: Optional[np.ndarray],
               tolerance: float, cap: int) -> PointSummary:
    best = float(values.max())
    near = np.flatnonzero(values >= best - tolerance)
    kept = near[:cap]
    rest = near[cap:]
    return PointSummary(
        max_value=best,
        candidates=[(int(patterns[i]), float(values[i])) for i in kept],
        overflow=int(rest.size),
        overflow_max=float(values[rest].max()) if rest.size else -np.inf,
        min_margin=float(margins.min()) if margins is not None and margins.size else np.inf,
        checked=int(values.size),
    )


def evaluate_range(task: ScanTask, bounds: Tuple[int, int]) -> PartialReport:
    """PartialReport of ranks [start, stop) of task.function_class."""
    start, stop = bounds
    n = task.function_class.n
    patterns = list(iter_truth_table_ints(task.function_class, start, stop))
    if not patterns:
        return PartialReport()
    partial = evaluate_tables(task, n, patterns, tables_from_ints(patterns, n))
    logger.debug(f"Evaluated ranks [{start}, {stop}) of {task.function_class.label}")
    return partial


def evaluate_tables(task: ScanTask, n: int, patterns: Sequence[int], tables: np.ndarray) -> PartialReport:
    """PartialReport of explicit sign tables (B, 2^n); patterns label the rows."""
    partial = PartialReport()
    patterns = np.array(patterns, dtype=object)
    spectra = spectrum_array(tables, n)
    negative_fraction = np.count_nonzero(tables == -1, axis=1) / tables.shape[1]
    dictators = dictator_mask(spectra, n) if task.check == COROLLARY else None

    deviations_by_alpha: Dict[float, np.ndarray] = {}
    for point, rhs in zip(task.points, task.rhs):
        deviations = deviations_by_alpha.get(point.alpha)
        if deviations is None:
            deviations = noise_array(spectra, 1.0 - 2.0 * point.alpha, n)
            deviations_by_alpha[point.alpha] = deviations

        if task.check == MOMENTS:
            values = even_moments_array(deviations, point.k)
        else:
            values = mutual_information_array(negative_fraction, deviations)

        margins = None
        violated = np.zeros(values.shape, dtype=bool)
        if rhs is not None:
            all_margins = rhs - values
            if task.check == COROLLARY:
                others = ~dictators
                margins = all_margins[others]
                violated = (others & (all_margins <= task.strict_margin)) | (
                    dictators & (np.abs(all_margins) >= task.tolerance)
                )
            else:
                margins = all_margins
                violated = values > rhs + task.tolerance

        partial.points[point.label] = _summarize(patterns, values, margins, task.tolerance, task.max_maximizers)

        bad = np.flatnonzero(violated)
        partial.violation_count += int(bad.size)
        room = task.max_violations - len(partial.violations)
        for i in bad[:max(room, 0)]:
            partial.violations.append(Violation(
                check=task.check,
                point=point.label,
                lhs=float(values[i]),
                rhs=float(rhs),
                function=f"{n}:{format_hex(n, int(patterns[i]))}",
                alpha=point.alpha,
            ))

    return partial
