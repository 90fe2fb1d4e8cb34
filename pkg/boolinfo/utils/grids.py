"""
Alpha Grid Parser
=================

Turns a --grid argument into a list of crossover probabilities.

Format:
    "21"                    count: evenly spaced points on the check's default interval
    "0.2114,0.25,0.3"       explicit comma list (any token with a '.' or more than one token)

Default intervals:
    conjecture, moments, search, taylor   [0.025, 1/2]
    theorem1                              [(1 - 1/sqrt 3)/2, 1/2]
    corollary                             1/2 - w + i w / N, i = 0..N-1, w = 2^-n / 4
"""

import re
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from boolinfo.analysis.bounds import corollary_threshold, theorem1_threshold
from boolinfo.core.errors import GridError

DEFAULT_GRID_COUNT = 21
DEFAULT_START = 0.025

_COUNT_PATTERN = re.compile(r"^\s*[0-9]+\s*$")

GridLike = Union[None, int, str, Sequence[float]]


def linspace_grid(start: float, end: float, count: int) -> List[float]:
    """count points from start to end inclusive."""
    if count < 1:
        raise GridError(f"grid needs at least one point, got {count}")
    if not 0.0 <= start <= end <= 0.5:
        raise GridError(f"need 0 <= start <= end <= 1/2, got start={start!r}, end={end!r}")
    return [float(a) for a in np.linspace(start, end, count)]


def corollary_grid(n: int, count: int) -> List[float]:
    """count points stepping from 1/2 - w towards 1/2 (1/2 itself excluded)."""
    if count < 1:
        raise GridError(f"grid needs at least one point, got {count}")
    width = corollary_threshold(n)
    return [0.5 - width + i * width / count for i in range(count)]


def default_interval(check: str) -> Tuple[float, float]:
    if check == "theorem1":
        return theorem1_threshold(), 0.5
    return DEFAULT_START, 0.5


def _check_points(points: Sequence[float]) -> List[float]:
    values = [float(a) for a in points]
    if not values:
        raise GridError("empty alpha grid")
    for a in values:
        if not 0.0 <= a <= 0.5:
            raise GridError(f"alpha {a!r} outside [0, 1/2]")
    return values


def parse_grid(grid: GridLike, check: str = "conjecture", n: Optional[int] = None,
               interval: Optional[Tuple[float, float]] = None) -> List[float]:
    """
    Resolve a grid argument for one check.

    Args:
        grid: None (default count), an int count, a count string, a comma list,
              or a sequence of floats
        check: decides the default interval for counts
        n: bit count (corollary windows only)
        interval: (start, end) for counts, replacing the check's default interval

    Raises:
        GridError: malformed text, empty grid, alpha outside [0, 1/2]
    """
    if grid is None:
        grid = DEFAULT_GRID_COUNT
    if isinstance(grid, str):
        text = grid.strip()
        if _COUNT_PATTERN.match(text):
            grid = int(text)
        else:
            try:
                grid = [float(token) for token in text.split(",") if token.strip()]
            except ValueError as e:
                raise GridError(f"cannot parse grid '{text}': {e}") from e
    if isinstance(grid, (int, np.integer)) and not isinstance(grid, bool):
        count = int(grid)
        if check == "corollary":
            if n is None:
                raise GridError("corollary grid needs n")
            return corollary_grid(n, count)
        start, end = interval if interval is not None else default_interval(check)
        return linspace_grid(start, end, count)
    return _check_points(grid)
