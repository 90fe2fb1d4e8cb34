"""
Hypercube Module
================

Boolean and real-valued functions on {-1,1}^n, the Fourier-Walsh transform
and the noise operator T_rho.

Index convention (shared by tables and spectra):
    bit j of an input mask m is set  <=>  x_{j+1} = -1
    bit j of a subset mask S is set  <=>  coordinate j+1 is in S

so that coeffs[S] is the coefficient of the character prod_{j in S} x_j.

Normalization: fourier_transform applies the 2^-n factor, inverse_transform
applies none, hence coeffs[S] = E_X[f(X) chi_S(X)] literally.

All array primitives (walsh_hadamard, spectrum_array, noise_array) act on the
last axis, so a batch of tables of shape (B, 2^n) is transformed in one call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from boolinfo.core.env_config import get_environment_config
from boolinfo.core.errors import DimensionOutOfRange, InvalidFunctionError, InvalidNoiseParameter
from boolinfo.core.logger import get_logger

logger = get_logger(__name__)

# O(4^n) character matrix; beyond this n the direct oracle is pointless.
DIRECT_TRANSFORM_N_MAX = 12


def _check_n(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidFunctionError(f"n must be an integer, got {n!r}")
    n_max = get_environment_config().n_max
    if n < 1 or n > n_max:
        raise DimensionOutOfRange(int(n), n_max)
    return int(n)


def _read_only(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


def popcounts(n: int) -> np.ndarray:
    """popcounts(n)[m] = number of set bits of m, for m in [0, 2^n)."""
    counts = np.zeros(1 << n, dtype=np.int64)
    for j in range(n):
        half = 1 << j
        counts[half:2 * half] = counts[:half] + 1
    return counts


def subset_mask(subset: Iterable[int], n: int) -> int:
    """Mask of a set of 1-based coordinates."""
    mask = 0
    for coordinate in subset:
        if not 1 <= coordinate <= n:
            raise InvalidFunctionError(f"coordinate {coordinate} out of range 1..{n}")
        mask |= 1 << (coordinate - 1)
    return mask


def walsh_hadamard(values, n: int) -> np.ndarray:
    """
    Unnormalized Walsh-Hadamard transform along the last axis.

    out[..., S] = sum_m values[..., m] * (-1)^{popcount(S & m)}

    In-place butterfly over a private copy: n passes, pass j pairs indices
    that differ in bit j. The transform is its own inverse up to 2^n.
    """
    out = np.array(values, dtype=np.float64)
    if out.shape[-1] != 1 << n:
        raise InvalidFunctionError(f"last axis has length {out.shape[-1]}, expected 2^{n}")
    lead = out.shape[:-1]
    for j in range(n):
        half = 1 << j
        view = out.reshape(lead + (-1, 2, half))
        low = view[..., 0, :].copy()
        high = view[..., 1, :]
        view[..., 0, :] += high
        view[..., 1, :] = low - high
    return out


def spectrum_array(tables, n: int) -> np.ndarray:
    """Fourier coefficients of table(s) along the last axis (2^-n normalized)."""
    return np.ldexp(walsh_hadamard(tables, n), -n)


def noise_array(coeffs, rho: float, n: int) -> np.ndarray:
    """Tables of T_rho applied to spectra along the last axis."""
    attenuation = np.power(float(rho), popcounts(n))
    return walsh_hadamard(np.asarray(coeffs) * attenuation, n)


# ============================================================================
# DOMAIN TYPES
# ============================================================================


@dataclass(frozen=True, eq=False)
class BooleanFunction:
    """
    f: {-1,1}^n -> {-1,1} stored as a read-only int8 table indexed by input mask.
    """

    n: int
    table: np.ndarray

    def __post_init__(self):
        n = _check_n(self.n)
        table = np.asarray(self.table)
        if table.ndim != 1 or table.shape[0] != 1 << n:
            raise InvalidFunctionError(
                f"table has shape {table.shape}, expected ({1 << n},) for n={n}"
            )
        if table.dtype.kind not in "iuf" or not np.all((table == 1) | (table == -1)):
            raise InvalidFunctionError("table entries must be exactly -1 or +1")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", _read_only(table.astype(np.int8)))

    @property
    def size(self) -> int:
        return 1 << self.n

    def count_negative(self) -> int:
        """Number of inputs with f(x) = -1 (exact integer)."""
        return int(np.count_nonzero(self.table == -1))

    def to_int(self) -> int:
        """Bit pattern: bit m set <=> f(mask m) = -1."""
        bits = np.packbits((self.table == -1).astype(np.uint8), bitorder="little")
        return int.from_bytes(bits.tobytes(), "little")

    @classmethod
    def from_int(cls, n: int, value: int) -> "BooleanFunction":
        """Inverse of to_int."""
        n = _check_n(n)
        size = 1 << n
        if value < 0 or value >> size:
            raise InvalidFunctionError(f"bit pattern {value:#x} does not fit 2^{n} = {size} bits")
        raw = np.frombuffer(value.to_bytes(max(1, (size + 7) // 8), "little"), dtype=np.uint8)
        bits = np.unpackbits(raw, bitorder="little", count=size)
        return cls(n, 1 - 2 * bits.astype(np.int8))

    def negate(self) -> "BooleanFunction":
        return BooleanFunction(self.n, -self.table)

    def permute(self, perm: Sequence[int]) -> "BooleanFunction":
        """
        g(x_1..x_n) = f(x_{perm[0]+1}, ..., x_{perm[n-1]+1}) for a 0-based permutation.
        """
        if sorted(perm) != list(range(self.n)):
            raise InvalidFunctionError(f"{list(perm)} is not a permutation of 0..{self.n - 1}")
        masks = np.arange(self.size, dtype=np.int64)
        source = np.zeros_like(masks)
        for j, p in enumerate(perm):
            source |= ((masks >> p) & 1) << j
        return BooleanFunction(self.n, self.table[source])

    def as_real(self) -> "RealHypercubeFunction":
        return RealHypercubeFunction(self.n, self.table.astype(np.float64))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.n, self.table.tobytes()))

    def __repr__(self) -> str:
        width = max(1, self.size // 4)
        return f"BooleanFunction({self.n}:{self.to_int():0{width}x})"


@dataclass(frozen=True, eq=False)
class RealHypercubeFunction:
    """Real-valued table on {-1,1}^n (noise-operator outputs, posterior deviations)."""

    n: int
    table: np.ndarray

    def __post_init__(self):
        n = _check_n(self.n)
        table = np.array(self.table, dtype=np.float64)
        if table.ndim != 1 or table.shape[0] != 1 << n:
            raise InvalidFunctionError(
                f"table has shape {table.shape}, expected ({1 << n},) for n={n}"
            )
        if not np.all(np.isfinite(table)):
            raise InvalidFunctionError("table values must be finite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "table", _read_only(table))

    def mean(self) -> float:
        return float(np.mean(self.table))

    def __repr__(self) -> str:
        return f"RealHypercubeFunction(n={self.n}, table={np.array2string(self.table, threshold=8)})"


@dataclass(frozen=True, eq=False)
class FourierSpectrum:
    """coeffs[mask(S)] = f_hat(S)."""

    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        n = _check_n(self.n)
        coeffs = np.array(self.coeffs, dtype=np.float64)
        if coeffs.ndim != 1 or coeffs.shape[0] != 1 << n:
            raise InvalidFunctionError(
                f"spectrum has shape {coeffs.shape}, expected ({1 << n},) for n={n}"
            )
        if not np.all(np.isfinite(coeffs)):
            raise InvalidFunctionError("coefficients must be finite")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", _read_only(coeffs))

    def coefficient(self, subset: Iterable[int] = ()) -> float:
        """f_hat(S) for a set of 1-based coordinates."""
        return float(self.coeffs[subset_mask(subset, self.n)])

    def parseval_total(self) -> float:
        return float(np.sum(self.coeffs ** 2))

    def __repr__(self) -> str:
        return f"FourierSpectrum(n={self.n}, coeffs={np.array2string(self.coeffs, threshold=8)})"


HypercubeInput = Union[BooleanFunction, RealHypercubeFunction]


# ============================================================================
# OPERATIONS
# ============================================================================


def make_function(n: int, table: Sequence[int]) -> BooleanFunction:
    """
    Validated constructor.

    Raises:
        DimensionOutOfRange: n outside [1, n_max]
        InvalidFunctionError: wrong length or non-sign entry
    """
    return BooleanFunction(n, np.asarray(table))


def _coordinate_signs(n: int, coordinate: int) -> np.ndarray:
    """x_coordinate evaluated at every input mask."""
    masks = np.arange(1 << n, dtype=np.int64)
    return (1 - 2 * ((masks >> (coordinate - 1)) & 1)).astype(np.int8)


def named_family(name: str, n: int, params=None) -> BooleanFunction:
    """
    Named function families.

    Args:
        name: dictator | parity | majority | constant | threshold
        n: bit count
        params:
            dictator  - coordinate i (1-based, default 1)
            parity    - iterable of coordinates (default all)
            majority  - unused, n must be odd
            constant  - +1 or -1 (default +1)
            threshold - (weights, theta): f(x) = +1 iff sum w_i x_i >= theta

    Raises:
        InvalidFunctionError: unknown family, bad params, majority with even n
    """
    n = _check_n(n)
    family = name.strip().lower()
    size = 1 << n

    if family == "dictator":
        coordinate = 1 if params is None else int(params)
        if not 1 <= coordinate <= n:
            raise InvalidFunctionError(f"dictator coordinate {coordinate} out of range 1..{n}")
        return BooleanFunction(n, _coordinate_signs(n, coordinate))

    if family == "parity":
        coordinates = range(1, n + 1) if params is None else params
        mask = subset_mask(coordinates, n)
        masks = np.arange(size, dtype=np.int64)
        parity = popcounts(n)[masks & mask] & 1
        return BooleanFunction(n, (1 - 2 * parity).astype(np.int8))

    if family == "majority":
        if n % 2 == 0:
            raise InvalidFunctionError(f"majority needs odd n, got n={n}")
        coordinate_sum = n - 2 * popcounts(n)
        return BooleanFunction(n, np.where(coordinate_sum > 0, 1, -1).astype(np.int8))

    if family == "constant":
        sign = 1 if params is None else int(params)
        if sign not in (1, -1):
            raise InvalidFunctionError(f"constant must be +1 or -1, got {params!r}")
        return BooleanFunction(n, np.full(size, sign, dtype=np.int8))

    if family == "threshold":
        if params is None:
            raise InvalidFunctionError("threshold needs (weights, theta)")
        weights, theta = params
        weights = [float(w) for w in weights]
        if len(weights) != n:
            raise InvalidFunctionError(f"threshold needs {n} weights, got {len(weights)}")
        value = np.zeros(size, dtype=np.float64)
        for j, weight in enumerate(weights, start=1):
            value += weight * _coordinate_signs(n, j)
        return BooleanFunction(n, np.where(value >= float(theta), 1, -1).astype(np.int8))

    raise InvalidFunctionError(f"unknown function family '{name}'")


def is_balanced(f: BooleanFunction) -> bool:
    """Exactly 2^(n-1) entries equal -1 (integer count)."""
    return f.count_negative() == 1 << (f.n - 1)


def is_dictator(f: BooleanFunction) -> Optional[int]:
    """Coordinate i if f = x_i or f = -x_i, else None."""
    if not is_balanced(f):
        return None
    for coordinate in range(1, f.n + 1):
        signs = _coordinate_signs(f.n, coordinate)
        if np.array_equal(f.table, signs) or np.array_equal(f.table, -signs):
            return coordinate
    return None


def fourier_transform(f: HypercubeInput) -> FourierSpectrum:
    """O(n 2^n) fast Walsh-Hadamard transform with the 2^-n factor."""
    return FourierSpectrum(f.n, spectrum_array(f.table, f.n))


def fourier_transform_direct(f: HypercubeInput) -> FourierSpectrum:
    """
    O(4^n) definition: f_hat(S) = 2^-n sum_x f(x) chi_S(x).
    Reference oracle for the fast transform.
    """
    if f.n > DIRECT_TRANSFORM_N_MAX:
        raise DimensionOutOfRange(f.n, DIRECT_TRANSFORM_N_MAX)
    masks = np.arange(1 << f.n, dtype=np.int64)
    overlap = popcounts(f.n)[masks[:, None] & masks[None, :]]
    characters = 1 - 2 * (overlap & 1)
    return FourierSpectrum(f.n, np.ldexp(characters @ f.table.astype(np.float64), -f.n))


def inverse_transform(spec: FourierSpectrum) -> RealHypercubeFunction:
    """f(x) = sum_S f_hat(S) chi_S(x)."""
    return RealHypercubeFunction(spec.n, walsh_hadamard(spec.coeffs, spec.n))


def _check_rho(rho: float) -> float:
    rho = float(rho)
    if not math.isfinite(rho) or rho < 0:
        raise InvalidNoiseParameter(f"noise correlation rho must be finite and >= 0, got {rho!r}")
    if rho > 1:
        logger.debug(f"Expansive noise operator requested (rho={rho!r} > 1)")
    return rho


def noise_operator(f: Union[HypercubeInput, FourierSpectrum], rho: float) -> RealHypercubeFunction:
    """
    T_rho f = sum_S f_hat(S) rho^|S| chi_S, computed in the spectral domain.

    rho > 1 is accepted (T_{1/rho} appears when composing with T_rho) but is
    logged at DEBUG level; public bound paths only use rho in [0, 1].

    Raises:
        InvalidNoiseParameter: rho negative or not finite
    """
    rho = _check_rho(rho)
    spec = f if isinstance(f, FourierSpectrum) else fourier_transform(f)
    return RealHypercubeFunction(spec.n, noise_array(spec.coeffs, rho, spec.n))


def weight_profile(spec: FourierSpectrum) -> tuple:
    """W_k = sum_{|S|=k} f_hat(S)^2 for k = 0..n."""
    weights = np.bincount(popcounts(spec.n), weights=spec.coeffs ** 2, minlength=spec.n + 1)
    return tuple(float(w) for w in weights)


def noise_stability(spec: FourierSpectrum, rho: float) -> float:
    """Stab_rho(f) = sum_S rho^|S| f_hat(S)^2 = E[f(X) f(Y)] for rho-correlated X, Y."""
    rho = _check_rho(rho)
    return float(np.sum(np.power(rho, popcounts(spec.n)) * spec.coeffs ** 2))
