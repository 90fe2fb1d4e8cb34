"""
Search Reports
==============

Per-point accumulators for scans and the final SearchReport.

A scan evaluates every function of a class at every point of a grid. A point
is one alpha (or one (alpha, k) pair for the moment check, one t for the
Taylor check). PartialReport holds the summary of one contiguous rank range;
merging two partials is a deterministic fold, and folding the chunks of a
class in rank order gives the same report for any worker count.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from boolinfo.core.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ScanPoint:
    """One grid point of a scan; label keys the report maps."""

    label: str
    alpha: Optional[float] = None
    k: Optional[int] = None

    @classmethod
    def for_alpha(cls, alpha: float) -> "ScanPoint":
        return cls(label=repr(float(alpha)), alpha=float(alpha))

    @classmethod
    def for_moment(cls, alpha: float, k: int) -> "ScanPoint":
        return cls(label=f"{float(alpha)!r}|k={k}", alpha=float(alpha), k=k)


@dataclass(frozen=True)
class Violation:
    """lhs <= rhs (or the check's own relation) failed for one function at one point."""

    check: str
    point: str
    lhs: float
    rhs: float
    function: Optional[str] = None
    alpha: Optional[float] = None

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "point": self.point,
            "function": self.function,
            "alpha": self.alpha,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Violation":
        return cls(check=data["check"], point=data["point"], lhs=data["lhs"], rhs=data["rhs"],
                   function=data.get("function"), alpha=data.get("alpha"))


@dataclass
class PointSummary:
    """
    Running maximum, its near-ties and the minimum margin at one point.

    candidates holds (pattern, value) pairs within `tolerance` of max_value in
    ascending pattern order, at most `cap` of them. overflow counts further
    qualifying entries that were not kept; overflow_max is the largest of
    their values so a later rise of the maximum can discard them.
    """

    max_value: float = -math.inf
    candidates: List[Tuple[int, float]] = field(default_factory=list)
    overflow: int = 0
    overflow_max: float = -math.inf
    min_margin: float = math.inf
    checked: int = 0

    @property
    def maximizer_count(self) -> int:
        return len(self.candidates) + self.overflow

    def merge(self, other: "PointSummary", tolerance: float, cap: int) -> "PointSummary":
        best = max(self.max_value, other.max_value)
        threshold = best - tolerance
        pool = sorted(c for c in self.candidates + other.candidates if c[1] >= threshold)
        overflow = 0
        overflow_max = -math.inf
        for side in (self, other):
            if side.overflow and side.overflow_max >= threshold:
                overflow += side.overflow
                overflow_max = max(overflow_max, side.overflow_max)
        if len(pool) > cap:
            dropped = pool[cap:]
            overflow += len(dropped)
            overflow_max = max(overflow_max, max(value for _, value in dropped))
            pool = pool[:cap]
        return PointSummary(
            max_value=best,
            candidates=pool,
            overflow=overflow,
            overflow_max=overflow_max,
            min_margin=min(self.min_margin, other.min_margin),
            checked=self.checked + other.checked,
        )

    def to_dict(self) -> dict:
        return {
            "max_value": _finite_or_none(self.max_value),
            "candidates": [[pattern, value] for pattern, value in self.candidates],
            "overflow": self.overflow,
            "overflow_max": _finite_or_none(self.overflow_max),
            "min_margin": _finite_or_none(self.min_margin),
            "checked": self.checked,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PointSummary":
        return cls(
            max_value=_none_to(data["max_value"], -math.inf),
            candidates=[(int(p), float(v)) for p, v in data["candidates"]],
            overflow=int(data["overflow"]),
            overflow_max=_none_to(data["overflow_max"], -math.inf),
            min_margin=_none_to(data["min_margin"], math.inf),
            checked=int(data["checked"]),
        )


def _finite_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def _none_to(value: Optional[float], default: float) -> float:
    return default if value is None else float(value)


@dataclass
class PartialReport:
    """Summary of one rank range: per-point summaries plus violations."""

    points: Dict[str, PointSummary] = field(default_factory=dict)
    violations: List[Violation] = field(default_factory=list)
    violation_count: int = 0

    def merge(self, other: "PartialReport", tolerance: float, max_maximizers: int,
              max_violations: int) -> "PartialReport":
        points = dict(self.points)
        for label, summary in other.points.items():
            points[label] = points[label].merge(summary, tolerance, max_maximizers) if label in points else summary
        violations = (self.violations + other.violations)[:max_violations]
        return PartialReport(points, violations, self.violation_count + other.violation_count)

    def to_dict(self) -> dict:
        return {
            "points": {label: summary.to_dict() for label, summary in self.points.items()},
            "violations": [v.to_dict() for v in self.violations],
            "violation_count": self.violation_count,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PartialReport":
        return cls(
            points={label: PointSummary.from_dict(s) for label, s in data["points"].items()},
            violations=[Violation.from_dict(v) for v in data["violations"]],
            violation_count=int(data["violation_count"]),
        )


@dataclass
class SearchReport:
    """
    Result of one verification run.

    checked_count is the number of (function, point) evaluations. min_margin
    values in [-tolerance, 0) are reported as 0.0: equality within rounding
    is not a violation.
    """

    check: str
    function_class: Optional[dict]
    alpha_grid: List[float]
    points: List[str]
    checked_count: int
    violations: List[Violation]
    violation_count: int
    maximizers: Dict[str, List[str]]
    maximizer_counts: Dict[str, int]
    max_values: Dict[str, Optional[float]]
    min_margin: Dict[str, Optional[float]]
    extra: Dict[str, object] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_dict(self) -> dict:
        payload = {
            "check": self.check,
            "class": self.function_class,
            "alpha_grid": self.alpha_grid,
            "checked_count": self.checked_count,
            "passed": self.passed,
            "violation_count": self.violation_count,
            "violations": [v.to_dict() for v in self.violations],
            "maximizers": self.maximizers,
            "maximizer_counts": self.maximizer_counts,
            "max_values": self.max_values,
            "min_margin": self.min_margin,
        }
        if self.extra:
            payload["extra"] = self.extra
        return payload


def snap_margin(margin: float, tolerance: float) -> Optional[float]:
    if not math.isfinite(margin):
        return None
    if -tolerance <= margin < 0.0:
        return 0.0
    return margin


def build_report(check: str, function_class: Optional[dict], alpha_grid: Sequence[float],
                 points: Sequence[ScanPoint], partial: PartialReport, tolerance: float,
                 format_pattern=None, extra: Optional[dict] = None) -> SearchReport:
    """Final SearchReport from the folded partial; format_pattern renders maximizer patterns."""
    maximizers: Dict[str, List[str]] = {}
    counts: Dict[str, int] = {}
    max_values: Dict[str, Optional[float]] = {}
    margins: Dict[str, Optional[float]] = {}
    checked = 0
    for point in points:
        summary = partial.points.get(point.label, PointSummary())
        checked += summary.checked
        render = format_pattern or str
        maximizers[point.label] = [render(pattern) for pattern, _ in summary.candidates]
        counts[point.label] = summary.maximizer_count
        max_values[point.label] = _finite_or_none(summary.max_value)
        margins[point.label] = snap_margin(summary.min_margin, tolerance)
    report = SearchReport(
        check=check,
        function_class=function_class,
        alpha_grid=[float(a) for a in alpha_grid],
        points=[p.label for p in points],
        checked_count=checked,
        violations=list(partial.violations),
        violation_count=partial.violation_count,
        maximizers=maximizers,
        maximizer_counts=counts,
        max_values=max_values,
        min_margin=margins,
        extra=dict(extra or {}),
    )
    logger.info(
        f"📋 {check}: checked {report.checked_count:,} evaluations, "
        f"{report.violation_count} violation(s)"
    )
    return report
