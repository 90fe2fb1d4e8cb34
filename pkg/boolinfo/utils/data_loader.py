import json
from pathlib import Path
from typing import Any, Dict, List


def load_verification_data() -> Dict[str, Any]:
    """
    Load test scenarios from config/verification_data.json.

    Returns:
        Dict containing all scenario sections
    """
    # boolinfo/utils/data_loader.py -> project root -> config/
    project_root = Path(__file__).resolve().parent.parent.parent
    config_path = project_root / "config" / "verification_data.json"

    if not config_path.exists():
        raise FileNotFoundError(f"Verification data file not found at: {config_path}")

    with open(config_path, 'r', encoding='utf-8') as f:
        return json.load(f)


# Singleton-like access to avoid reloading multiple times
_VERIFICATION_DATA = None


def get_verification_data() -> Dict[str, Any]:
    global _VERIFICATION_DATA
    if _VERIFICATION_DATA is None:
        _VERIFICATION_DATA = load_verification_data()
    return _VERIFICATION_DATA


def get_section(section: str) -> Dict[str, Any]:
    """One top-level section, e.g. get_section("acceptance")."""
    return get_verification_data().get(section, {})


def get_scenarios(section: str) -> List[Dict[str, Any]]:
    """Scenario list of one section, e.g. get_scenarios("mutual_information")."""
    return get_section(section).get("scenarios", [])
