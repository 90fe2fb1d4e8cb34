"""
Environment Configuration Module
==================================

Infrastructure-level configuration loader.
Reads defaults from boolinfo/config/settings.yaml and overrides from
BOOLINFO_* environment variables (a .env file is loaded by the CLI entry
point and by conftest.py through python-dotenv).

Usage:
    from boolinfo.core.env_config import get_environment_config

    config = get_environment_config()
    print(config.n_max)              # int
    print(config.bound_tolerance)    # float
    print(config.threads)            # int
"""

import os
from pathlib import Path
from typing import Optional, Dict, Any

import yaml

from boolinfo.core.logger import get_logger

logger = get_logger(__name__)

SETTINGS_PATH = Path(__file__).parent.parent / "config" / "settings.yaml"


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning(f"⚠️  {name}={raw!r} is not an integer; using {default}")
        return default


class EnvironmentConfig:
    """
    Read-only runtime configuration.

    Loads settings from:
    1. settings.yaml (defaults)
    2. Environment variables (BOOLINFO_NMAX, BOOLINFO_THREADS, BOOLINFO_LOG_LEVEL,
       BOOLINFO_LOG_JSON, BOOLINFO_LOG_FILE, BOOLINFO_CHECKPOINT_DIR)
    """

    def __init__(self, settings_path: Optional[Path] = None):
        self._settings_path = Path(settings_path) if settings_path else SETTINGS_PATH
        self._load_settings()
        self._load_env_overrides()
        self._validate_config()

    def _load_settings(self):
        """Load defaults from settings.yaml."""
        settings: Dict[str, Any] = {}
        if self._settings_path.exists():
            with open(self._settings_path, "r", encoding="utf-8") as f:
                settings = yaml.safe_load(f) or {}
        else:
            logger.warning(f"⚠️  settings.yaml not found at {self._settings_path}; using built-in defaults")

        limits = settings.get("limits", {})
        tolerances = settings.get("tolerances", {})
        channel = settings.get("channel", {})
        search = settings.get("search", {})
        logging_cfg = settings.get("logging", {})

        self.n_max = int(limits.get("n_max", 24))
        self.exhaustive_n_max = int(limits.get("exhaustive_n_max", 4))
        self.large_n_max = int(limits.get("large_n_max", 5))

        self.identity_tolerance = float(tolerances.get("identity", 1e-9))
        self.bound_tolerance = float(tolerances.get("bound", 1e-12))
        self.strict_margin = float(tolerances.get("strict_margin", 1e-12))

        self.k_max = int(channel.get("k_max", 8))

        self.chunk_size = int(search.get("chunk_size", 4096))
        self.checkpoint_interval = int(search.get("checkpoint_interval", 1 << 20))
        self.max_recorded_maximizers = int(search.get("max_recorded_maximizers", 64))
        self.max_recorded_violations = int(search.get("max_recorded_violations", 100))
        self.threads = int(search.get("threads", 1))
        self.checkpoint_dir = str(search.get("checkpoint_dir", "reports/checkpoints"))

        self.log_level = str(logging_cfg.get("level", "INFO"))
        self.log_json = bool(logging_cfg.get("json", False))
        self.log_file = logging_cfg.get("file")

    def _load_env_overrides(self):
        """Apply BOOLINFO_* environment variables."""
        self.n_max = _env_int("BOOLINFO_NMAX", self.n_max)
        self.threads = _env_int("BOOLINFO_THREADS", self.threads)
        self.log_level = os.getenv("BOOLINFO_LOG_LEVEL", self.log_level)
        self.log_json = _env_bool("BOOLINFO_LOG_JSON", self.log_json)
        self.log_file = os.getenv("BOOLINFO_LOG_FILE", self.log_file)
        self.checkpoint_dir = os.getenv("BOOLINFO_CHECKPOINT_DIR", self.checkpoint_dir)

        logger.debug(f"🔧 Configuration loaded: {self!r}")

    def _validate_config(self):
        """Clamp nonsensical values and warn."""
        if self.n_max < 1:
            logger.warning(f"⚠️  n_max={self.n_max} < 1; using 1")
            self.n_max = 1
        if self.threads < 1:
            logger.warning(f"⚠️  threads={self.threads} < 1; using 1")
            self.threads = 1
        if self.chunk_size < 1:
            raise ValueError(f"chunk_size must be positive, got {self.chunk_size}")
        if self.checkpoint_interval % self.chunk_size:
            logger.warning(
                f"⚠️  checkpoint_interval={self.checkpoint_interval} is not a multiple "
                f"of chunk_size={self.chunk_size}; blocks end on a partial chunk"
            )

    def to_dict(self) -> Dict[str, Any]:
        """Export configuration as dictionary."""
        return {
            "n_max": self.n_max,
            "exhaustive_n_max": self.exhaustive_n_max,
            "large_n_max": self.large_n_max,
            "identity_tolerance": self.identity_tolerance,
            "bound_tolerance": self.bound_tolerance,
            "strict_margin": self.strict_margin,
            "k_max": self.k_max,
            "chunk_size": self.chunk_size,
            "checkpoint_interval": self.checkpoint_interval,
            "max_recorded_maximizers": self.max_recorded_maximizers,
            "max_recorded_violations": self.max_recorded_violations,
            "threads": self.threads,
            "checkpoint_dir": self.checkpoint_dir,
            "log_level": self.log_level,
            "log_json": self.log_json,
            "log_file": self.log_file,
        }

    def __repr__(self) -> str:
        return (
            f"EnvironmentConfig("
            f"n_max={self.n_max}, "
            f"threads={self.threads}, "
            f"exhaustive_n_max={self.exhaustive_n_max}, "
            f"bound_tolerance={self.bound_tolerance}"
            f")"
        )


# Singleton instance - loaded once per process
_config_instance: Optional[EnvironmentConfig] = None


def get_environment_config() -> EnvironmentConfig:
    """Get singleton EnvironmentConfig instance."""
    global _config_instance

    if _config_instance is None:
        _config_instance = EnvironmentConfig()

    return _config_instance


def reset_environment_config():
    """Reset singleton (for testing purposes)."""
    global _config_instance
    _config_instance = None
