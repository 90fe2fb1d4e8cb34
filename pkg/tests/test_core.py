"""
Core Infrastructure Tests
=========================

Configuration layering, SmartAssert failures, step tracking, JSON log
lines and the error hierarchy.
"""

import json
import logging

import pytest
import allure

from boolinfo.core import (
    BoolinfoLogger,
    EnvironmentConfig,
    SmartAssert,
    get_current_step_name,
    get_environment_config,
    get_logger,
    is_in_step,
    step_aware_loggerStep,
)
from boolinfo.core.errors import (
    BoolinfoError,
    DimensionOutOfRange,
    EnumerationLimitError,
    FunctionSpecError,
    GridError,
    InvalidNoiseParameter,
    PremiseViolation,
)


class TestEnvironmentConfig:
    """settings.yaml defaults and BOOLINFO_* overrides."""

    @allure.title("Defaults come from settings.yaml")
    @allure.tag("core", "config", "smoke")
    @allure.severity(allure.severity_level.CRITICAL)
    @pytest.mark.smoke
    def test_defaults(self, fresh_config):
        for name in ("BOOLINFO_NMAX", "BOOLINFO_THREADS", "BOOLINFO_LOG_LEVEL"):
            fresh_config.delenv(name, raising=False)
        config = get_environment_config()
        with step_aware_loggerStep("Step 1: Limits and tolerances"):
            SmartAssert.equal(config.n_max, 24, "n_max")
            SmartAssert.equal(config.exhaustive_n_max, 4, "Exhaustive limit")
            SmartAssert.equal(config.large_n_max, 5, "--large limit")
            SmartAssert.equal(config.bound_tolerance, 1e-12, "Bound tolerance")
            SmartAssert.equal(config.identity_tolerance, 1e-9, "Identity tolerance")
        with step_aware_loggerStep("Step 2: Search settings"):
            SmartAssert.equal(config.checkpoint_interval, 1 << 20, "2^20 functions per record")
            SmartAssert.equal(config.max_recorded_violations, 100, "Violation cap")
            SmartAssert.equal(config.threads, 1, "One worker")
            SmartAssert.equal(sorted(config.to_dict()), sorted(vars(config).keys() - {"_settings_path"}),
                              "to_dict covers every setting")

    @allure.title("Environment variables override settings.yaml")
    @allure.tag("core", "config")
    @allure.severity(allure.severity_level.CRITICAL)
    def test_env_overrides(self, fresh_config):
        fresh_config.setenv("BOOLINFO_NMAX", "10")
        fresh_config.setenv("BOOLINFO_THREADS", "3")
        fresh_config.setenv("BOOLINFO_LOG_JSON", "true")
        config = get_environment_config()
        SmartAssert.equal(config.n_max, 10, "BOOLINFO_NMAX")
        SmartAssert.equal(config.threads, 3, "BOOLINFO_THREADS")
        SmartAssert.equal(config.log_json, True, "BOOLINFO_LOG_JSON")
        SmartAssert.true(get_environment_config() is config, "Cached instance")

    @allure.title("Bad values fall back or are clamped")
    @allure.tag("core", "config")
    @allure.severity(allure.severity_level.NORMAL)
    def test_bad_values(self, fresh_config):
        fresh_config.setenv("BOOLINFO_NMAX", "lots")
        fresh_config.setenv("BOOLINFO_THREADS", "0")
        config = get_environment_config()
        SmartAssert.equal(config.n_max, 24, "Non-integer ignored")
        SmartAssert.equal(config.threads, 1, "Clamped to one worker")

    @allure.title("A custom settings file replaces the defaults")
    @allure.tag("core", "config")
    @allure.severity(allure.severity_level.NORMAL)
    def test_settings_file(self, tmp_path, fresh_config):
        fresh_config.delenv("BOOLINFO_NMAX", raising=False)
        settings = tmp_path / "settings.yaml"
        settings.write_text("limits:\n  n_max: 12\nsearch:\n  chunk_size: 64\n  checkpoint_interval: 128\n",
                            encoding="utf-8")
        config = EnvironmentConfig(settings)
        SmartAssert.equal((config.n_max, config.chunk_size, config.checkpoint_interval), (12, 64, 128),
                          "Values from the file")
        SmartAssert.equal(config.strict_margin, 1e-12, "Missing keys keep built-in defaults")
        missing = EnvironmentConfig(tmp_path / "absent.yaml")
        SmartAssert.equal(missing.chunk_size, 4096, "No file: built-in defaults")


class TestSmartAssertAndSteps:

    @allure.title("SmartAssert raises AssertionError with both sides")
    @allure.tag("core", "assertions")
    @allure.severity(allure.severity_level.NORMAL)
    def test_failures(self):
        with pytest.raises(AssertionError, match="Expected: 2"):
            SmartAssert.equal(1, 2, "one is two")
        with pytest.raises(AssertionError, match="diff"):
            SmartAssert.close(1.0, 1.1, 1e-3, "near")
        with pytest.raises(AssertionError):
            SmartAssert.close(float("nan"), 1.0, 1.0, "nan is never close")
        with pytest.raises(AssertionError):
            SmartAssert.true(1, "truthy is not True")
        with pytest.raises(AssertionError):
            SmartAssert.at_most(1.0, 0.5, 0.1, "above")
        with pytest.raises(AssertionError):
            SmartAssert.contains("abc", "z", "missing")
        SmartAssert.at_most(0.6, 0.5, 0.2, "within slack")

    @allure.title("Steps are tracked while open")
    @allure.tag("core", "steps")
    @allure.severity(allure.severity_level.NORMAL)
    def test_step_tracking(self):
        SmartAssert.false(is_in_step(), "No step outside")
        with step_aware_loggerStep("Outer step"):
            SmartAssert.equal(get_current_step_name(), "Outer step", "Active step name")
            SmartAssert.true(is_in_step(), "Inside a step")
        result = step_aware_loggerStep("Action step", action=lambda: 41 + 1)
        SmartAssert.equal(result, 42, "Action result returned")
        SmartAssert.equal(get_current_step_name(), None, "Step closed")


class TestLogging:

    @allure.title("JSON log lines go to the configured file")
    @allure.tag("core", "logging")
    @allure.severity(allure.severity_level.NORMAL)
    def test_json_log_file(self, tmp_path):
        root = logging.getLogger()
        saved_handlers, saved_level = list(root.handlers), root.level
        log_file = tmp_path / "logs" / "boolinfo.log"
        try:
            BoolinfoLogger.reset()
            BoolinfoLogger.configure(log_level="DEBUG", log_file=str(log_file), console_output=False,
                                     json_format=True)
            get_logger("boolinfo.tests").info("scan finished")
            for handler in root.handlers:
                handler.flush()
            record = json.loads(log_file.read_text(encoding="utf-8").strip().splitlines()[-1])
            SmartAssert.equal(record["message"], "scan finished", "Message field")
            SmartAssert.equal(record["levelname"], "INFO", "Level field")
            SmartAssert.equal(record["name"], "boolinfo.tests", "Logger name field")
        finally:
            for handler in root.handlers:
                handler.close()
            root.handlers[:] = saved_handlers
            root.setLevel(saved_level)
            BoolinfoLogger._initialized = True


class TestErrors:

    @allure.title("Every deliberate error derives from BoolinfoError")
    @allure.tag("core", "errors")
    @allure.severity(allure.severity_level.NORMAL)
    def test_hierarchy(self):
        errors = [
            DimensionOutOfRange(30, 24),
            PremiseViolation("theorem1", 0.1, "(1-2*alpha)*sqrt(3) <= 1"),
            FunctionSpecError("foo@n=3", 0, "unknown family"),
            EnumerationLimitError("too many", hint="pass --large"),
            GridError("empty alpha grid"),
            InvalidNoiseParameter("alpha 0.7 outside [0, 1/2]"),
        ]
        for error in errors:
            SmartAssert.true(isinstance(error, BoolinfoError), f"{type(error).__name__} is a BoolinfoError")
        SmartAssert.contains(str(errors[0]), "BOOLINFO_NMAX", "Dimension error names the override")
        SmartAssert.contains(str(errors[1]), "fails at 0.1", "Premise error names the value")
        SmartAssert.contains(str(errors[2]), "position 0", "Spec error names the position")
        SmartAssert.contains(str(errors[3]), "(hint: pass --large)", "Hint appended")
        SmartAssert.true(isinstance(errors[4], ValueError), "Value errors stay ValueErrors")
        SmartAssert.false(isinstance(errors[1], ValueError), "Premise failures are not ValueErrors")


if __name__ == "__main__":
    pytest.main([__file__, "-v", "-s"])
