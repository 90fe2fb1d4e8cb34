"""
Errors Module
=============

Typed error hierarchy for the toolkit.

Every error raised on purpose by boolinfo derives from BoolinfoError, so the
CLI can turn it into a one-line message and exit status 2. Errors that describe
bad argument values also derive from ValueError.

Violations found by verification runs are NOT errors; they are recorded in
the SearchReport.
"""

from typing import Optional


class BoolinfoError(Exception):
    """Root of all boolinfo errors."""


class InvalidFunctionError(BoolinfoError, ValueError):
    """Truth table / real table does not match its declared shape or alphabet."""


class DimensionOutOfRange(BoolinfoError, ValueError):
    """Bit-count n outside [1, n_max]."""

    def __init__(self, n: int, n_max: int):
        self.n = n
        self.n_max = n_max
        super().__init__(
            f"n={n} out of range: expected 1 <= n <= {n_max} "
            f"(raise the cap with BOOLINFO_NMAX)"
        )


class InvalidNoiseParameter(BoolinfoError, ValueError):
    """Probability, crossover probability, correlation or norm exponent outside its domain."""


class PremiseViolation(BoolinfoError):
    """
    A bound was requested outside the parameter range where it is proven.

    Attributes:
        bound: bound name (e.g. "theorem1", "moment_bound")
        value: offending parameter value (usually alpha)
        premise: human-readable premise that failed
    """

    def __init__(self, bound: str, value: float, premise: str):
        self.bound = bound
        self.value = value
        self.premise = premise
        super().__init__(f"{bound}: premise '{premise}' fails at {value!r}")


class FunctionSpecError(BoolinfoError, ValueError):
    """Function spec string could not be parsed."""

    def __init__(self, spec: str, position: int, reason: str):
        self.spec = spec
        self.position = position
        self.reason = reason
        super().__init__(f"cannot parse '{spec}' at position {position}: {reason}")


class GridError(BoolinfoError, ValueError):
    """Alpha grid / sweep configuration is malformed."""


class EnumerationLimitError(BoolinfoError):
    """Requested function class is too large to enumerate with current flags."""

    def __init__(self, message: str, hint: Optional[str] = None):
        self.hint = hint
        super().__init__(f"{message} (hint: {hint})" if hint else message)


class MomentInputError(BoolinfoError, ValueError):
    """Moment-based MI bound called with unusable inputs."""
