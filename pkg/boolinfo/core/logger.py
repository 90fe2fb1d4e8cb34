"""
Logger Module
=============

Centralized logging for the toolkit. Provides:
- Unified logging across analysis, search and CLI layers
- stderr + optional file output (stdout stays clean for CSV/JSON data)
- Optional JSON log lines (python-json-logger) for log analysis
- Step-aware logging that also feeds Allure when running under pytest

Step-Aware Logging:
- step_aware_loggerStep() - Open a new step with auto-context management
- step_aware_loggerInfo() - Log info that attaches to active step
- step_aware_loggerError() - Log an error that attaches to active step
- step_aware_loggerAttach() - Attach data (e.g. a JSON report) to active step

Outside an Allure session the allure hooks have no listeners, so the same
calls are safe from the CLI and from worker processes.
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Callable, Any

import allure
from pythonjsonlogger import jsonlogger

from boolinfo.core.step_context import (
    StepContext,
    get_active_step,
    attach_to_active_step,
    is_step_active,
)


DEFAULT_LOG_FORMAT = "[%(asctime)s] [%(name)s] [%(levelname)s] %(message)s"


class BoolinfoLogger:
    """Singleton manager for logging infrastructure."""

    _loggers = {}
    _initialized = False

    @classmethod
    def configure(cls,
                  log_level: str = "INFO",
                  log_format: str = DEFAULT_LOG_FORMAT,
                  log_file: Optional[str] = None,
                  console_output: bool = True,
                  json_format: bool = False) -> None:
        """
        Configure the root logger once per process.

        Args:
            log_level: DEBUG | INFO | WARNING | ERROR | CRITICAL
            log_format: Log format string (also selects JSON fields)
            log_file: Path to log file (if None - not saved to file)
            console_output: Emit to stderr
            json_format: One JSON object per line instead of plain text
        """
        if cls._initialized:
            return

        root_logger = logging.getLogger()
        root_logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))
        root_logger.handlers.clear()

        if json_format:
            formatter = jsonlogger.JsonFormatter(log_format)
        else:
            formatter = logging.Formatter(log_format)

        if console_output:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(formatter)
            root_logger.addHandler(console_handler)

        if log_file:
            log_file_path = Path(log_file)
            log_file_path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file_path, encoding="utf-8")
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)

        cls._initialized = True

    @classmethod
    def configure_from_environment(cls) -> None:
        """Configure from EnvironmentConfig (settings.yaml + BOOLINFO_* env vars)."""
        from boolinfo.core.env_config import get_environment_config

        config = get_environment_config()
        cls.configure(
            log_level=config.log_level,
            log_file=config.log_file,
            json_format=config.log_json,
        )

    @classmethod
    def reset(cls) -> None:
        """Allow configure() to run again (tests)."""
        cls._initialized = False

    @classmethod
    def get_logger(cls, name: str) -> logging.Logger:
        """
        Get a component-specific logger.

        Args:
            name: Component name (usually __name__)
        """
        if name not in cls._loggers:
            cls._loggers[name] = logging.getLogger(name)
        return cls._loggers[name]


def get_logger(name: str) -> logging.Logger:
    """
    Helper function to get a logger easily.

    Example:
        from boolinfo.core.logger import get_logger
        logger = get_logger(__name__)
        logger.info("Scanning balanced functions...")
    """
    return BoolinfoLogger.get_logger(name)


_step_logger = get_logger("boolinfo.steps")


# ============================================================================
# STEP-AWARE LOGGING API (ContextVar-Based)
# ============================================================================


def step_aware_loggerStep(step_name: str,
                          action: Optional[Callable[[], Any]] = None,
                          validate: Optional[Callable[[Any], None]] = None) -> Any:
    """
    Open a new step with automatic context management.

    Args:
        step_name: Step name (log line + Allure step title)
        action: Optional callable to execute within step
        validate: Optional validation callable to run on action result

    Returns:
        Result of action() if provided, else the StepContext itself

    Usage:
        with step_aware_loggerStep("Scan n=4 balanced"):
            report = verify_theorem1(4, grid)

        report = step_aware_loggerStep("Scan", action=lambda: verify_theorem1(4, grid))
    """
    _step_logger.info(f"📌 Step: {step_name}")

    step_context = StepContext(step_name)

    if action is None:
        return step_context

    with step_context:
        result = action()
        if validate:
            validate(result)
        return result


def step_aware_loggerInfo(message: str) -> None:
    """
    Log info message and attach it to the active step.

    If no step is active, attaches at test level (or nowhere outside pytest).
    """
    if not message or message.isspace():
        message = "(empty message)"

    _step_logger.info(message)
    attach_to_active_step(
        body=message,
        name="info_log",
        attachment_type=allure.attachment_type.TEXT,
    )


def step_aware_loggerError(message: str) -> None:
    """Log an ERROR message and attach it to the active step."""
    _step_logger.error(message)
    attach_to_active_step(
        body=message,
        name="error_log",
        attachment_type=allure.attachment_type.TEXT,
    )


def step_aware_loggerAttach(message: str,
                            name: str = "attachment",
                            attachment_type=allure.attachment_type.TEXT) -> None:
    """
    Attach data to the active step.

    Usage:
        step_aware_loggerAttach(to_json(report.to_dict()), name="conjecture_report",
                                attachment_type=allure.attachment_type.JSON)
    """
    _step_logger.debug(f"📎 Attach [{name}]: {len(str(message))} chars")
    attach_to_active_step(
        body=message,
        name=name,
        attachment_type=attachment_type,
    )


def get_current_step_name() -> Optional[str]:
    """Name of the currently active step, or None."""
    active_step = get_active_step()
    return active_step.step_name if active_step else None


def is_in_step() -> bool:
    """True when code runs inside a step."""
    return is_step_active()
