"""
Random Utils Module
===================

Seeded generators for functions and real tables.

Everything takes either a seed or a numpy Generator, so the same seed always
yields the same function (and tests can share one Generator across draws).

Utilities:
- make_rng()
- random_balanced()
- random_function()
- random_real_table()
- random_permutation()
"""

from typing import List, Optional, Union

import numpy as np

from boolinfo.analysis.hypercube import BooleanFunction, RealHypercubeFunction

SeedLike = Union[None, int, np.random.Generator]


def make_rng(seed: SeedLike = None) -> np.random.Generator:
    """Generator from a seed (pass-through for an existing Generator)."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_balanced(n: int, seed: SeedLike = None) -> BooleanFunction:
    """
    Uniform random balanced function.

    A half -1 / half +1 table shuffled by a seeded permutation.
    """
    rng = make_rng(seed)
    size = 1 << n
    half = np.concatenate([np.full(size // 2, -1, dtype=np.int8), np.ones(size - size // 2, dtype=np.int8)])
    return BooleanFunction(n, rng.permutation(half))


def random_function(n: int, seed: SeedLike = None) -> BooleanFunction:
    """Uniform random function (each entry an independent fair sign)."""
    rng = make_rng(seed)
    return BooleanFunction(n, rng.choice(np.array([-1, 1], dtype=np.int8), size=1 << n))


def random_real_table(n: int, seed: SeedLike = None) -> RealHypercubeFunction:
    """Standard normal entries."""
    rng = make_rng(seed)
    return RealHypercubeFunction(n, rng.standard_normal(1 << n))


def random_permutation(n: int, seed: SeedLike = None) -> List[int]:
    """0-based coordinate permutation."""
    rng = make_rng(seed)
    return [int(p) for p in rng.permutation(n)]


def random_seed(seed: Optional[int] = None) -> int:
    """Concrete seed to log and replay when none was given."""
    return int(make_rng(seed).integers(0, 2 ** 32))
