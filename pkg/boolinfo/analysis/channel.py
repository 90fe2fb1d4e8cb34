"""
Channel Module
==============

Exact information quantities of f(X) observed through BSC(alpha).

X is uniform on {-1,1}^n and Y_i = X_i Z_i with Pr(Z_i = -1) = alpha.
The posterior deviation d(y) = 1 - 2 Pr(f(X) = -1 | Y = y) equals
(T_{1-2alpha} f)(y), so every quantity here is a sum over one noise-operator
table: no sampling, no Monte Carlo.

Array helpers (entropy_of_deviation, mutual_information_array,
even_moments_array) act on the last axis and are shared with the batch scans
in boolinfo.search, so single-function and exhaustive results agree bit for bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, NamedTuple, Optional, Tuple, Union

import numpy as np

from boolinfo.analysis.hypercube import (
    BooleanFunction,
    FourierSpectrum,
    RealHypercubeFunction,
    noise_operator,
    popcounts,
)
from boolinfo.core.env_config import get_environment_config
from boolinfo.core.errors import InvalidNoiseParameter, MomentInputError
from boolinfo.core.logger import get_logger

logger = get_logger(__name__)

# log2(e) from the natural-log constant (no transcribed decimals).
LOG2_E = 1.0 / math.log(2.0)

# Below this correlation 1 - h((1-rho)/2) is summed as a power series.
_SERIES_RHO_LIMIT = 0.5
_SERIES_MAX_TERMS = 64


@dataclass(frozen=True)
class NoiseParameter:
    """Crossover probability alpha in [0, 1/2]; rho = 1 - 2 alpha is derived."""

    alpha: float

    def __post_init__(self):
        alpha = float(self.alpha)
        if not 0.0 <= alpha <= 0.5:
            raise InvalidNoiseParameter(f"crossover probability must lie in [0, 1/2], got {self.alpha!r}")
        object.__setattr__(self, "alpha", alpha)

    @property
    def rho(self) -> float:
        return 1.0 - 2.0 * self.alpha

    @classmethod
    def of(cls, alpha: "AlphaLike") -> "NoiseParameter":
        return alpha if isinstance(alpha, NoiseParameter) else cls(alpha)


AlphaLike = Union[float, NoiseParameter]


@dataclass(frozen=True)
class PosteriorTable:
    """d(y) = 1 - 2 P_y^f for every output mask y."""

    n: int
    deviations: RealHypercubeFunction
    alpha: NoiseParameter

    @property
    def posteriors(self) -> np.ndarray:
        """P_y^f = Pr(f(X) = -1 | Y = y)."""
        return (1.0 - self.deviations.table) / 2.0


@dataclass
class MomentReport:
    """Even moments M_2k = E_Y[d(Y)^2k] for k = 1..k_max, plus the exact MI."""

    n: int
    alpha: NoiseParameter
    moments: Dict[int, float] = field(default_factory=dict)
    mi_bits: Optional[float] = None

    def moment(self, k: int) -> float:
        if k not in self.moments:
            raise MomentInputError(f"moment M_{2 * k} not in report (k_max={max(self.moments, default=0)})")
        return self.moments[k]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha.alpha,
            "moments": [self.moments[k] for k in sorted(self.moments)],
            "mi_bits": self.mi_bits,
        }


class HypercontractivityCheck(NamedTuple):
    lhs: float
    rhs: float
    premise_ok: bool


# ============================================================================
# ENTROPY
# ============================================================================


def binary_entropy(p: float) -> float:
    """
    h(p) in bits; h(0) = h(1) = 0.

    Raises:
        InvalidNoiseParameter: p outside [0, 1]
    """
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise InvalidNoiseParameter(f"probability must lie in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def binary_entropy_array(p) -> np.ndarray:
    """Vectorized h(p); rounding excursions outside [0, 1] are clipped."""
    p = np.clip(np.asarray(p, dtype=np.float64), 0.0, 1.0)
    return _entropy_pair(p, 1.0 - p)


def entropy_of_deviation(d) -> np.ndarray:
    """
    h((1 - d) / 2) for deviations d in [-1, 1].

    Both halves are formed from d directly, which keeps full precision when
    d is close to 0 (alpha near 1/2).
    """
    d = np.clip(np.asarray(d, dtype=np.float64), -1.0, 1.0)
    return _entropy_pair((1.0 - d) / 2.0, (1.0 + d) / 2.0)


def _entropy_pair(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    out = np.zeros(np.broadcast(p, q).shape, dtype=np.float64)
    inner = (p > 0.0) & (q > 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        terms = -(p * np.log2(p) + q * np.log2(q))
    out[inner] = terms[inner]
    return out


def taylor_coefficient(k: int) -> float:
    """c_k = log2(e) / (2k (2k - 1)), the k-th coefficient of 1 - h((1-p)/2)."""
    return LOG2_E / (2 * k * (2 * k - 1))


def taylor_weights(t: int) -> List[float]:
    """[c_1, ..., c_{t-1}, 1 - sum_{k<t} c_k]; the last weight collects the tail."""
    t = _check_positive_int(t, "t")
    head = [taylor_coefficient(k) for k in range(1, t)]
    tail = 1.0
    for c in head:
        tail -= c
    return head + [tail]


def bsc_capacity(rho: float) -> float:
    """
    1 - h((1 - rho) / 2), the capacity of BSC((1-rho)/2).

    Small rho uses the power series sum_k c_k rho^2k, which avoids the
    cancellation in 1 - h(alpha) as alpha -> 1/2.
    """
    rho = abs(float(rho))
    if rho > 1.0:
        raise InvalidNoiseParameter(f"correlation must lie in [-1, 1], got {rho!r}")
    if rho >= _SERIES_RHO_LIMIT:
        return 1.0 - binary_entropy((1.0 - rho) / 2.0)
    total = 0.0
    power = rho * rho
    x = power
    for k in range(1, _SERIES_MAX_TERMS + 1):
        term = taylor_coefficient(k) * power
        total += term
        if term <= total * 1e-18:
            break
        power *= x
    return total


def entropy_taylor_lower_bound(p: float, t: int) -> float:
    """
    1 - sum_{k<t} c_k p^2k - (1 - sum_{k<t} c_k) p^2t  <=  h((1-p)/2).

    Raises:
        InvalidNoiseParameter: p outside [-1, 1]
    """
    p = float(p)
    if not -1.0 <= p <= 1.0:
        raise InvalidNoiseParameter(f"p must lie in [-1, 1], got {p!r}")
    x = p * p
    value = 1.0
    power = 1.0
    for weight in taylor_weights(t):
        power *= x
        value -= weight * power
    return value


# ============================================================================
# POSTERIORS, MI, MOMENTS
# ============================================================================


def _check_positive_int(k, name: str) -> int:
    if isinstance(k, bool) or not isinstance(k, (int, np.integer)) or k < 1:
        raise MomentInputError(f"{name} must be a positive integer, got {k!r}")
    return int(k)


def posterior_table(f: BooleanFunction, alpha: AlphaLike) -> PosteriorTable:
    """d = T_{1-2alpha} f."""
    alpha = NoiseParameter.of(alpha)
    return PosteriorTable(f.n, noise_operator(f, alpha.rho), alpha)


def mutual_information_array(negative_fraction, deviations) -> np.ndarray:
    """
    I(f(X); Y) = h(Pr(f = -1)) - E_Y h(P_Y) for batches along the last axis.

    Clamped into [0, H(f(X))] to absorb rounding.
    """
    prior = binary_entropy_array(negative_fraction)
    conditional = np.mean(entropy_of_deviation(deviations), axis=-1)
    return np.clip(prior - conditional, 0.0, prior)


def even_moments_array(deviations, k: int) -> np.ndarray:
    """M_2k = 2^-n sum_y d(y)^2k along the last axis (direct summation)."""
    return np.mean(np.power(np.asarray(deviations, dtype=np.float64), 2 * k), axis=-1)


def conditional_entropy(f: BooleanFunction, alpha: AlphaLike) -> float:
    """H(f(X) | Y) = E_Y h(P_Y^f)."""
    deviations = posterior_table(f, alpha).deviations.table
    return float(np.mean(entropy_of_deviation(deviations)))


def mutual_information(f: BooleanFunction, alpha: AlphaLike) -> float:
    """Exact I(f(X); Y) in bits, balanced or not."""
    table = posterior_table(f, alpha)
    negative_fraction = f.count_negative() / f.size
    return float(mutual_information_array(negative_fraction, table.deviations.table))


def even_moment(f: BooleanFunction, alpha: AlphaLike, k: int) -> float:
    """E_Y[(1 - 2 P_Y^f)^2k]."""
    k = _check_positive_int(k, "k")
    return float(even_moments_array(posterior_table(f, alpha).deviations.table, k))


def moment_report(f: BooleanFunction, alpha: AlphaLike, k_max: Optional[int] = None) -> MomentReport:
    """M_2 .. M_{2 k_max} (default k_max from settings) with the exact MI."""
    alpha = NoiseParameter.of(alpha)
    if k_max is None:
        k_max = get_environment_config().k_max
    k_max = _check_positive_int(k_max, "k_max")
    deviations = posterior_table(f, alpha).deviations.table
    moments = {k: float(even_moments_array(deviations, k)) for k in range(1, k_max + 1)}
    mi = float(mutual_information_array(f.count_negative() / f.size, deviations))
    return MomentReport(n=f.n, alpha=alpha, moments=moments, mi_bits=mi)


def second_moment_spectral(spec: FourierSpectrum, rho: float) -> float:
    """sum_S f_hat(S)^2 rho^(2|S|); equals even_moment(f, alpha, 1) at rho = 1 - 2 alpha."""
    rho = float(rho)
    if not 0.0 <= rho <= 1.0:
        raise InvalidNoiseParameter(f"rho must lie in [0, 1], got {rho!r}")
    return float(np.sum(spec.coeffs ** 2 * np.power(rho, 2 * popcounts(spec.n))))


def max_posterior_deviation(f: BooleanFunction, alpha: AlphaLike) -> Tuple[float, int]:
    """
    (max_y |d(y)|, y*) where y* is the smallest mask within 1e-12 of the maximum.
    """
    magnitude = np.abs(posterior_table(f, alpha).deviations.table)
    best = float(magnitude.max())
    mask = int(np.flatnonzero(magnitude >= best - 1e-12)[0])
    return best, mask


def mi_upper_from_moments(moments: MomentReport, t: int, balanced: bool) -> float:
    """
    sum_{k<t} c_k M_2k + (1 - sum_{k<t} c_k) M_2t, an upper bound on I(f(X); Y).

    Raises:
        MomentInputError: balanced is False, or a needed moment is missing
    """
    if not balanced:
        raise MomentInputError("moment-based MI bound requires a balanced function (H(f(X)) = 1)")
    weights = taylor_weights(t)
    return float(sum(weight * moments.moment(k) for k, weight in enumerate(weights, start=1)))


def hypercontractive_check(g: Union[BooleanFunction, RealHypercubeFunction], rho: float,
                           p: float, q: float) -> HypercontractivityCheck:
    """
    lhs = ||T_rho g||_q, rhs = ||g||_p, premise_ok = rho <= sqrt((p-1)/(q-1)).

    When premise_ok, lhs <= rhs holds (Bonami-Beckner).

    Raises:
        InvalidNoiseParameter: p < 1, q <= p, q not finite, or rho < 0
    """
    p, q, rho = float(p), float(q), float(rho)
    if not (1.0 <= p < q < math.inf):
        raise InvalidNoiseParameter(f"need 1 <= p < q < inf, got p={p!r}, q={q!r}")
    smoothed = noise_operator(g, rho).table
    lhs = float(np.mean(np.abs(smoothed) ** q) ** (1.0 / q))
    rhs = float(np.mean(np.abs(np.asarray(g.table, dtype=np.float64)) ** p) ** (1.0 / p))
    limit = math.sqrt((p - 1.0) / (q - 1.0))
    return HypercontractivityCheck(lhs, rhs, rho <= limit * (1.0 + 1e-12))
