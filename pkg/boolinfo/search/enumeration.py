"""
Enumeration Module
==================

Function classes at small n, ranked in increasing truth-table integer order.

Rank r of the class maps to one bit pattern T (bit m set <=> f(m) = -1):
    all        T = r
    balanced   the r-th integer with exactly 2^(n-1) bits set; unranked with
               the combinatorial number system, then advanced with the
               next-combination bit trick

so a rank range [start, stop) is a contiguous, reproducible slice of the
stream that any worker can produce on its own.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from boolinfo.analysis.hypercube import BooleanFunction
from boolinfo.core.env_config import get_environment_config
from boolinfo.core.errors import DimensionOutOfRange, EnumerationLimitError
from boolinfo.core.logger import get_logger

logger = get_logger(__name__)


class Scope(str, Enum):
    ALL = "all"
    BALANCED = "balanced"


@dataclass(frozen=True)
class FunctionClass:
    """
    All (or all balanced) Boolean functions on n bits.

    Raises:
        EnumerationLimitError: n above exhaustive_n_max, unless scope is balanced,
            n <= large_n_max and large is set
    """

    n: int
    scope: Scope = Scope.BALANCED
    large: bool = False

    def __post_init__(self):
        object.__setattr__(self, "scope", Scope(self.scope))
        config = get_environment_config()
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise DimensionOutOfRange(self.n, config.exhaustive_n_max)
        if self.n <= config.exhaustive_n_max:
            return
        if self.n <= config.large_n_max and self.scope is Scope.BALANCED:
            if self.large:
                logger.info(f"🐘 Large enumeration enabled: {class_size(self):,} balanced functions at n={self.n}")
                return
            raise EnumerationLimitError(
                f"{class_size(self):,} balanced functions at n={self.n} exceed the default "
                f"exhaustive limit n <= {config.exhaustive_n_max}",
                hint="pass --large (progress is checkpointed)",
            )
        raise EnumerationLimitError(
            f"cannot enumerate scope={self.scope.value} at n={self.n}",
            hint=f"exhaustive runs need n <= {config.exhaustive_n_max} "
                 f"(balanced n <= {config.large_n_max} with --large); sample with random:SEED@n={self.n}",
        )

    @property
    def size(self) -> int:
        return class_size(self)

    @property
    def label(self) -> str:
        return f"{self.scope.value}:n={self.n}"

    def to_dict(self) -> dict:
        return {"n": self.n, "scope": self.scope.value, "size": self.size}


def class_size(cls: FunctionClass) -> int:
    """2^(2^n) for all, C(2^n, 2^(n-1)) for balanced."""
    size = 1 << cls.n
    if cls.scope is Scope.ALL:
        return 1 << size
    return math.comb(size, size // 2)


def _unrank_combination(rank: int, width: int, ones: int) -> int:
    """rank-th integer below 2^width with exactly `ones` bits set."""
    pattern = 0
    for i in range(ones, 0, -1):
        # largest c with C(c, i) <= rank
        c = i - 1
        while c + 1 < width and math.comb(c + 1, i) <= rank:
            c += 1
        rank -= math.comb(c, i)
        pattern |= 1 << c
        width = c
    return pattern


def _next_combination(pattern: int) -> int:
    lowest = pattern & -pattern
    ripple = pattern + lowest
    return (((ripple ^ pattern) >> 2) // lowest) | ripple


def iter_truth_table_ints(cls: FunctionClass, start: int = 0, stop: Optional[int] = None) -> Iterator[int]:
    """Bit patterns of ranks [start, stop) in increasing order."""
    total = class_size(cls)
    stop = total if stop is None else min(stop, total)
    if not 0 <= start <= stop:
        raise ValueError(f"bad rank range [{start}, {stop}) for class of size {total}")
    if cls.scope is Scope.ALL:
        yield from range(start, stop)
        return
    if start == stop:
        return
    size = 1 << cls.n
    pattern = _unrank_combination(start, size, size // 2)
    for _ in range(stop - start - 1):
        yield pattern
        pattern = _next_combination(pattern)
    yield pattern


def enumerate_functions(cls: FunctionClass) -> Iterator[BooleanFunction]:
    """Every function of the class, in rank order."""
    for pattern in iter_truth_table_ints(cls):
        yield BooleanFunction.from_int(cls.n, pattern)
