"""
boolinfo Core Module
====================

Core Infrastructure - the ambient components every layer uses.

Components:
- logger: Unified logging (stderr/file/JSON) + step-aware Allure logging
- step_context: contextvars-based step tracking
- env_config: settings.yaml + BOOLINFO_* environment configuration
- assertions: SmartAssert numeric/boolean checks
- errors: typed error hierarchy
"""

from boolinfo.core.logger import (
    BoolinfoLogger,
    get_logger,
    step_aware_loggerStep,
    step_aware_loggerInfo,
    step_aware_loggerError,
    step_aware_loggerAttach,
    get_current_step_name,
    is_in_step,
)
from boolinfo.core.env_config import EnvironmentConfig, get_environment_config, reset_environment_config
from boolinfo.core.assertions import SmartAssert
from boolinfo.core.errors import (
    BoolinfoError,
    InvalidFunctionError,
    DimensionOutOfRange,
    InvalidNoiseParameter,
    PremiseViolation,
    FunctionSpecError,
    GridError,
    EnumerationLimitError,
    MomentInputError,
)

__all__ = [
    'BoolinfoLogger',
    'get_logger',
    'step_aware_loggerStep',
    'step_aware_loggerInfo',
    'step_aware_loggerError',
    'step_aware_loggerAttach',
    'get_current_step_name',
    'is_in_step',
    'EnvironmentConfig',
    'get_environment_config',
    'reset_environment_config',
    'SmartAssert',
    'BoolinfoError',
    'InvalidFunctionError',
    'DimensionOutOfRange',
    'InvalidNoiseParameter',
    'PremiseViolation',
    'FunctionSpecError',
    'GridError',
    'EnumerationLimitError',
    'MomentInputError',
]
