"""
Smart Assertions Module
========================

Assertions that log the check, attach it to the active step and raise
AssertionError with both sides spelled out.

Usage:
    from boolinfo.core import SmartAssert

    SmartAssert.true(report.passed, "No violations", "Scan found violations")
    SmartAssert.equal(report.checked_count, 70 * 21, "Checked count")
    SmartAssert.close(mi, 1 - h, 1e-12, "Dictator attains the conjectured bound")
    SmartAssert.at_most(mi, bound, 1e-12, "MI below theorem1 bound")
"""

import math

from boolinfo.core.logger import get_logger, step_aware_loggerInfo, step_aware_loggerError

logger = get_logger(__name__)


def _fail(step_description: str, error_message: str, *details: str) -> None:
    step_aware_loggerError(f"❌ FAIL: {step_description}\n   Error: {error_message}")
    for line in details:
        step_aware_loggerError(f"   {line}")
    raise AssertionError("\n".join([step_description, *details, error_message]))


def _pass(step_description: str) -> bool:
    step_aware_loggerInfo(f"✅ PASS: {step_description}")
    return True


class SmartAssert:
    """Assertion helpers with logging and Allure integration."""

    @staticmethod
    def true(condition: bool, step_description: str, error_message: str = "Assertion failed") -> bool:
        """Assert that condition is True (identity, not truthiness)."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        if condition is True:
            return _pass(step_description)
        _fail(step_description, error_message)

    @staticmethod
    def false(condition: bool, step_description: str, error_message: str = "Assertion failed") -> bool:
        """Assert that condition is False."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        if condition is False:
            return _pass(step_description)
        _fail(step_description, error_message)

    @staticmethod
    def equal(actual, expected, step_description: str, error_message: str = "Values are not equal") -> bool:
        """Assert that actual == expected."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        step_aware_loggerInfo(f"   Expected: {expected}")
        step_aware_loggerInfo(f"   Actual: {actual}")
        if actual == expected:
            return _pass(step_description)
        _fail(step_description, error_message, f"Expected: {expected}", f"Actual: {actual}")

    @staticmethod
    def close(actual: float, expected: float, tolerance: float, step_description: str,
              error_message: str = "Values differ by more than the tolerance") -> bool:
        """Assert |actual - expected| < tolerance."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        diff = abs(actual - expected)
        step_aware_loggerInfo(f"   Expected: {expected!r}  Actual: {actual!r}  |diff|={diff:.3e}")
        if math.isfinite(diff) and diff < tolerance:
            return _pass(step_description)
        _fail(step_description, error_message,
              f"Expected: {expected!r}", f"Actual: {actual!r}", f"|diff|={diff!r} >= {tolerance!r}")

    @staticmethod
    def at_most(lhs: float, rhs: float, tolerance: float, step_description: str,
                error_message: str = "Left side exceeds right side") -> bool:
        """Assert lhs <= rhs + tolerance."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        step_aware_loggerInfo(f"   lhs={lhs!r}  rhs={rhs!r}")
        if lhs <= rhs + tolerance:
            return _pass(step_description)
        _fail(step_description, error_message, f"lhs={lhs!r}", f"rhs={rhs!r}", f"tolerance={tolerance!r}")

    @staticmethod
    def less_than(lhs: float, rhs: float, step_description: str,
                  error_message: str = "Left side is not strictly smaller") -> bool:
        """Assert lhs < rhs."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        step_aware_loggerInfo(f"   lhs={lhs!r}  rhs={rhs!r}")
        if lhs < rhs:
            return _pass(step_description)
        _fail(step_description, error_message, f"lhs={lhs!r}", f"rhs={rhs!r}")

    @staticmethod
    def contains(text: str, substring: str, step_description: str,
                 error_message: str = "Text does not contain substring") -> bool:
        """Assert that text contains substring."""
        step_aware_loggerInfo(f"🔍 CHECKING: {step_description}")
        step_aware_loggerInfo(f"   Looking for: '{substring}'")
        if substring in text:
            return _pass(step_description)
        _fail(step_description, error_message, f"'{substring}' not found in '{text[:200]}'")
