"""
Moment Crossover Experiment
===========================

Majority against the dictator, moment by moment, at one alpha.

The dictator has the largest second moment of all balanced functions, but
majority has posterior deviations of larger magnitude: max_y |d(y)| exceeds
1 - 2 alpha as soon as alpha < 1/2. Its high moments therefore grow past the
dictator's, and the gap (max|d|_Maj / max|d|_Dict)^2k increases with k.
"""

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

import numpy as np

from boolinfo.analysis.bounds import moment_bound_ratio
from boolinfo.analysis.channel import NoiseParameter, even_moments_array, posterior_table
from boolinfo.analysis.hypercube import named_family
from boolinfo.core.errors import DimensionOutOfRange, InvalidFunctionError
from boolinfo.core.logger import get_logger

logger = get_logger(__name__)

CROSSOVER_N_MAX = 7
DEFAULT_K_LIST = (1, 2, 4, 8, 16, 32, 64)


@dataclass
class CrossoverRow:
    k: int
    moment_majority: float
    moment_dictator: float
    moment_ratio: Optional[float]
    log_max_deviation_ratio: Optional[float]
    max_deviation_ratio: Optional[float]
    lemma_ratio: int
    lower_bound_holds: bool

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class CrossoverTable:
    """
    Rows per k. lower_bound_holds checks M_2k >= 2^-n max|d|^2k for majority.
    degenerate is set at alpha = 1/2, where every moment is 0 and ratios are None.
    """

    n: int
    alpha: float
    max_deviation_majority: float
    max_deviation_dictator: float
    rows: List[CrossoverRow] = field(default_factory=list)
    degenerate: bool = False
    max_deviation_ratio_increasing: Optional[bool] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "max_deviation_majority": self.max_deviation_majority,
            "max_deviation_dictator": self.max_deviation_dictator,
            "degenerate": self.degenerate,
            "max_deviation_ratio_increasing": self.max_deviation_ratio_increasing,
            "rows": [row.to_dict() for row in self.rows],
        }


def _ratio(numerator: float, denominator: float) -> Optional[float]:
    return numerator / denominator if denominator > 0.0 else None


def moment_crossover_experiment(n: int = 3, k_list: Iterable[int] = DEFAULT_K_LIST,
                                alpha: float = 0.25) -> CrossoverTable:
    """
    M_2k(Maj_n) / M_2k(x_1) and (max|d|_Maj / max|d|_Dict)^2k for k in k_list.

    Raises:
        InvalidFunctionError: n even
        DimensionOutOfRange: n > 7
    """
    if n > CROSSOVER_N_MAX:
        raise DimensionOutOfRange(n, CROSSOVER_N_MAX)
    if n % 2 == 0:
        raise InvalidFunctionError(f"majority needs odd n, got n={n}")
    noise = NoiseParameter.of(alpha)
    majority = posterior_table(named_family("majority", n), noise).deviations.table
    dictator = posterior_table(named_family("dictator", n, 1), noise).deviations.table
    top_majority = float(np.max(np.abs(majority)))
    top_dictator = float(np.max(np.abs(dictator)))

    table = CrossoverTable(n=n, alpha=noise.alpha, max_deviation_majority=top_majority,
                           max_deviation_dictator=top_dictator)
    table.degenerate = top_dictator == 0.0 or top_majority == 0.0

    for k in sorted(set(int(k) for k in k_list)):
        m_majority = float(even_moments_array(majority, k))
        m_dictator = float(even_moments_array(dictator, k))
        if table.degenerate:
            log_ratio = None
            ratio = None
        else:
            log_ratio = 2 * k * (math.log(top_majority) - math.log(top_dictator))
            ratio = math.exp(log_ratio) if log_ratio < 700.0 else math.inf
        floor = math.ldexp(top_majority ** (2 * k), -n)
        table.rows.append(CrossoverRow(
            k=k,
            moment_majority=m_majority,
            moment_dictator=m_dictator,
            moment_ratio=_ratio(m_majority, m_dictator),
            log_max_deviation_ratio=log_ratio,
            max_deviation_ratio=ratio,
            lemma_ratio=moment_bound_ratio(k),
            lower_bound_holds=m_majority >= floor * (1.0 - 1e-12),
        ))

    if not table.degenerate and top_majority > noise.rho:
        logs = [row.log_max_deviation_ratio for row in table.rows]
        table.max_deviation_ratio_increasing = logs[0] > 0.0 and all(b > a for a, b in zip(logs, logs[1:]))
        if not table.max_deviation_ratio_increasing:
            logger.warning(f"⚠️  Max-deviation ratio not increasing in k at n={n}, alpha={noise.alpha!r}")
    logger.info(f"🧪 Moment crossover at n={n}, alpha={noise.alpha!r}: "
                f"max|d| majority={top_majority!r}, dictator={top_dictator!r}")
    return table
