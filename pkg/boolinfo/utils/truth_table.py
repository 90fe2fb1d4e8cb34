"""
Truth Table Codec
=================

Hex and integer forms of Boolean functions.

A function on n bits is the 2^n-bit integer T with bit m set <=> f(mask m) = -1.
Text form is "n:HEX" where HEX has max(1, 2^n / 4) digits, so sorting the
strings of one n sorts the integers.

Example:
    format_table(named_family("parity", 2))  ->  "2:6"
    parse_table("2:9")                       ->  -(x1 x2)
"""

import re
from typing import Iterable

import numpy as np

from boolinfo.analysis.hypercube import BooleanFunction
from boolinfo.core.errors import FunctionSpecError

# Widest n whose bit pattern fits one uint64 lane.
_VECTOR_N_MAX = 6

_TABLE_PATTERN = re.compile(r"^\s*(\d+)\s*:\s*([0-9a-fA-F]+)\s*$")


def hex_width(n: int) -> int:
    """Digits of a full truth table at n bits."""
    return max(1, (1 << n) // 4)


def format_hex(n: int, value: int) -> str:
    return f"{value:0{hex_width(n)}x}"


def format_table(f: BooleanFunction) -> str:
    """'n:HEX' for f."""
    return f"{f.n}:{format_hex(f.n, f.to_int())}"


def parse_table(text: str, spec: str = None, offset: int = 0) -> BooleanFunction:
    """
    Parse 'n:HEX' into a BooleanFunction.

    Args:
        text: the 'n:HEX' part
        spec: full spec string for error messages (defaults to text)
        offset: position of text inside spec

    Raises:
        FunctionSpecError: malformed text or a pattern wider than 2^n bits
    """
    spec = text if spec is None else spec
    match = _TABLE_PATTERN.match(text)
    if not match:
        raise FunctionSpecError(spec, offset, "expected 'n:HEX' (e.g. '3:e8')")
    n = int(match.group(1))
    value = int(match.group(2), 16)
    if n < 1:
        raise FunctionSpecError(spec, offset + match.start(1), f"n must be >= 1, got {n}")
    if value >> (1 << n):
        raise FunctionSpecError(
            spec, offset + match.start(2),
            f"hex '{match.group(2)}' has more than 2^{n} = {1 << n} bits",
        )
    return BooleanFunction.from_int(n, value)


def tables_from_ints(values: Iterable[int], n: int) -> np.ndarray:
    """
    Sign tables for many bit patterns at once.

    Returns:
        int8 array of shape (len(values), 2^n)
    """
    size = 1 << n
    if n <= _VECTOR_N_MAX:
        patterns = np.fromiter((int(v) for v in values), dtype=np.uint64)
        shifts = np.arange(size, dtype=np.uint64)
        bits = (patterns[:, None] >> shifts[None, :]) & np.uint64(1)
        return (1 - 2 * bits.astype(np.int8)).astype(np.int8)
    rows = [BooleanFunction.from_int(n, int(v)).table for v in values]
    return np.stack(rows) if rows else np.zeros((0, size), dtype=np.int8)
