"""
Bounds Module
=============

Closed-form upper bounds on I(f(X); Y) and on the even posterior moments,
each with its premise check.

All bounds are written in x = rho^2 with rho = 1 - 2 alpha:

    conjectured   1 - h(alpha)
    quadratic     x
    moment(k)     (2k-1)^k x^k                        premise rho sqrt(2k-1) <= 1
    general_t(t)  sum_{k<t} c_k (2k-1)^k x^k
                  + (1 - sum_{k<t} c_k) (2t-1)^t x^t  premise rho sqrt(2t-1) <= 1
    theorem1      general_t(2)                        premise alpha >= (1 - 1/sqrt 3) / 2

A bound asked for outside its premise raises PremiseViolation; bound_report
turns those into None so tables can show a blank cell.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, Optional

from boolinfo.analysis.channel import LOG2_E, AlphaLike, NoiseParameter, bsc_capacity, taylor_weights
from boolinfo.core.env_config import get_environment_config
from boolinfo.core.errors import DimensionOutOfRange, MomentInputError, PremiseViolation
from boolinfo.core.logger import get_logger

logger = get_logger(__name__)

# Relative slack on rho sqrt(2k-1) <= 1, so an alpha computed as the threshold itself passes.
_PREMISE_SLACK = 1e-12


def _positive_int(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise MomentInputError(f"{name} must be a positive integer, got {value!r}")
    return value


def _dimension(n) -> int:
    n_max = get_environment_config().n_max
    if isinstance(n, bool) or not isinstance(n, int) or not 1 <= n <= n_max:
        raise DimensionOutOfRange(n, n_max)
    return n


def _premise_holds(rho: float, k: int) -> bool:
    return rho * math.sqrt(2 * k - 1) <= 1.0 + _PREMISE_SLACK


# ============================================================================
# THRESHOLDS AND PREMISES
# ============================================================================


def general_t_threshold(t: int) -> float:
    """Smallest alpha where the order-t bound is proven: (1 - 1/sqrt(2t-1)) / 2."""
    t = _positive_int(t, "t")
    return 0.5 * (1.0 - 1.0 / math.sqrt(2 * t - 1))


def theorem1_threshold() -> float:
    """(1 - 1/sqrt 3) / 2, about 0.2113."""
    return general_t_threshold(2)


def moment_premise(alpha: AlphaLike, k: int) -> bool:
    """(1 - 2 alpha) sqrt(2k - 1) <= 1."""
    return _premise_holds(NoiseParameter.of(alpha).rho, _positive_int(k, "k"))


def corollary_threshold(n: int) -> float:
    """Width 2^-n / 4 of the very-noisy window [1/2 - width, 1/2] where dictators are optimal."""
    n = _dimension(n)
    return math.ldexp(0.25, -n)


# ============================================================================
# BOUNDS
# ============================================================================


def conjectured_bound(alpha: AlphaLike) -> float:
    """1 - h(alpha), attained by dictators."""
    return bsc_capacity(NoiseParameter.of(alpha).rho)


def quadratic_bound(alpha: AlphaLike) -> float:
    """(1 - 2 alpha)^2, valid for every Boolean function."""
    rho = NoiseParameter.of(alpha).rho
    return rho * rho


def moment_bound_ratio(k: int) -> int:
    """(2k-1)^k: moment bound divided by the dictator's moment rho^2k."""
    k = _positive_int(k, "k")
    return (2 * k - 1) ** k


def moment_bound(alpha: AlphaLike, k: int) -> float:
    """
    (2k-1)^k (1 - 2 alpha)^2k, an upper bound on E_Y[(1 - 2 P_Y^f)^2k] for balanced f.

    Raises:
        PremiseViolation: (1 - 2 alpha) sqrt(2k - 1) > 1
    """
    alpha = NoiseParameter.of(alpha)
    k = _positive_int(k, "k")
    if not _premise_holds(alpha.rho, k):
        raise PremiseViolation("moment_bound", alpha.alpha, f"(1-2*alpha)*sqrt({2 * k - 1}) <= 1")
    return moment_bound_ratio(k) * alpha.rho ** (2 * k)


def general_t_bound(alpha: AlphaLike, t: int) -> float:
    """
    Order-t upper bound on I(f(X); Y) for balanced f.

    The entropy Taylor lower bound of order t is evaluated on the moment
    bounds of order 1..t. t = 1 gives the quadratic bound, t = 2 gives the
    theorem1 bound.

    Raises:
        PremiseViolation: alpha < (1 - 1/sqrt(2t-1)) / 2
    """
    alpha = NoiseParameter.of(alpha)
    t = _positive_int(t, "t")
    rho = alpha.rho
    if not _premise_holds(rho, t):
        raise PremiseViolation(
            "general_t" if t != 2 else "theorem1",
            alpha.alpha,
            f"alpha >= (1 - 1/sqrt({2 * t - 1}))/2 = {general_t_threshold(t)!r}",
        )
    x = rho * rho
    total = 0.0
    power = 1.0
    for k, weight in enumerate(taylor_weights(t), start=1):
        power *= x
        total += weight * moment_bound_ratio(k) * power
    return total


def theorem1_bound(alpha: AlphaLike) -> float:
    """
    (log2(e)/2) x + 9 (1 - log2(e)/2) x^2 with x = (1 - 2 alpha)^2.

    Raises:
        PremiseViolation: alpha < (1 - 1/sqrt 3) / 2
    """
    return general_t_bound(alpha, 2)


def nondictator_mi_bound(alpha: AlphaLike, n: int) -> float:
    """
    Upper bound on I(f(X); Y) for balanced f that is not a dictator:

        c (1 - 4^-n) x + (9 (1 - c) + c 4^-n) x^2,  c = log2(e)/2, x = (1 - 2 alpha)^2

    Inside the window [1/2 - corollary_threshold(n), 1/2] this is below c x,
    which is below 1 - h(alpha).

    Raises:
        PremiseViolation: alpha < (1 - 1/sqrt 3) / 2
    """
    alpha = NoiseParameter.of(alpha)
    if not _premise_holds(alpha.rho, 2):
        raise PremiseViolation("nondictator_mi_bound", alpha.alpha,
                               f"alpha >= (1 - 1/sqrt(3))/2 = {theorem1_threshold()!r}")
    n = _dimension(n)
    c = LOG2_E / 2.0
    quarter_power = math.ldexp(1.0, -2 * n)
    x = alpha.rho * alpha.rho
    return c * (1.0 - quarter_power) * x + (9.0 * (1.0 - c) + c * quarter_power) * x * x


# ============================================================================
# REPORT
# ============================================================================


@dataclass
class BoundReport:
    """Every bound at one alpha; None where the premise fails."""

    alpha: NoiseParameter
    conjectured: float
    quadratic: float
    theorem1: Optional[float]
    general_t: Dict[int, Optional[float]] = field(default_factory=dict)
    moment_bounds: Dict[int, Optional[float]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.alpha,
            "conjectured": self.conjectured,
            "quadratic": self.quadratic,
            "theorem1": self.theorem1,
            "general_t": {str(t): value for t, value in sorted(self.general_t.items())},
            "moment_bounds": {str(k): value for k, value in sorted(self.moment_bounds.items())},
        }


def _unless_premise_fails(bound: Callable[..., float], *args) -> Optional[float]:
    try:
        return bound(*args)
    except PremiseViolation as e:
        logger.debug(f"{e}")
        return None


def bound_report(alpha: AlphaLike, t_values: Iterable[int] = (1, 2, 3, 4),
                 k_values: Iterable[int] = (1, 2, 3, 4)) -> BoundReport:
    """Evaluate all bounds at alpha."""
    alpha = NoiseParameter.of(alpha)
    return BoundReport(
        alpha=alpha,
        conjectured=conjectured_bound(alpha),
        quadratic=quadratic_bound(alpha),
        theorem1=_unless_premise_fails(theorem1_bound, alpha),
        general_t={t: _unless_premise_fails(general_t_bound, alpha, t) for t in t_values},
        moment_bounds={k: _unless_premise_fails(moment_bound, alpha, k) for k in k_values},
    )
