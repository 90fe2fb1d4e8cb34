"""
Step Context Manager
====================

Step tracking for logs and Allure reports.
Uses contextvars, so parallel workers and pytest-xdist processes each see
their own active step.

Features:
- Nested steps: the previous step is restored on exit
- Step duration logged on exit (scan timings end up in the log)
- Attachments go to the innermost active step
"""

import logging
import time
from contextvars import ContextVar
from typing import Optional

import allure


_active_step_context: ContextVar[Optional["StepContext"]] = ContextVar("active_step", default=None)

_logger = logging.getLogger(__name__)


class StepContext:
    """An open step: wraps allure.step and records its wall time."""

    def __init__(self, step_name: str):
        self.step_name = step_name
        self.elapsed: Optional[float] = None
        self._allure_step = None
        self._previous_step: Optional["StepContext"] = None
        self._started_at = 0.0

    def __enter__(self):
        self._previous_step = _active_step_context.get()
        self._allure_step = allure.step(self.step_name)
        self._allure_step.__enter__()
        self._started_at = time.perf_counter()
        _active_step_context.set(self)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.elapsed = time.perf_counter() - self._started_at
        status = "failed" if exc_type else "done"
        _logger.debug(f"Step '{self.step_name}' {status} in {self.elapsed:.3f}s")
        try:
            self._allure_step.__exit__(exc_type, exc_val, exc_tb)
        finally:
            _active_step_context.set(self._previous_step)
        return False

    def attach(self, body: str, name: str = "attachment",
               attachment_type=allure.attachment_type.TEXT) -> None:
        """Attach data to this step."""
        allure.attach(str(body) if body else "(empty)", name=name or "attachment",
                      attachment_type=attachment_type)


def get_active_step() -> Optional[StepContext]:
    """Currently active StepContext or None."""
    return _active_step_context.get()


def is_step_active() -> bool:
    """True if a step is currently active."""
    return _active_step_context.get() is not None


def attach_to_active_step(body: str, name: str = "attachment",
                          attachment_type=allure.attachment_type.TEXT) -> None:
    """
    Attach data to the innermost active step.
    If no step is active, attaches to test level.
    """
    active_step = get_active_step()
    if active_step:
        active_step.attach(body, name, attachment_type)
    else:
        allure.attach(str(body) if body else "(empty)", name=name or "attachment",
                      attachment_type=attachment_type)
