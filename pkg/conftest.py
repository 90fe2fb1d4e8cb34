"""
Conftest.py - Global Test Configuration
=========================================

Pytest will automatically discover and load this file.
Used for:
- Global fixtures
- Hooks
- Per-run report directories (isolated per xdist worker)
- Automatic Allure HTML report generation

ALLURE REPORTING INTEGRATION:
=============================
1. pytest.ini specifies: --alluredir=reports/allure-results
   → allure-pytest writes test results (JSON) to the central location

2. After tests finish: pytest_sessionfinish() runs _generate_allure_report_master()
   → Copies this run's results into the per-run directory
   → Runs 'allure generate' to create the HTML report

3. Report location: reports/{TIMESTAMP}/allure-report/
   → View with ./view_latest_report.sh

Per-run Directory Structure:
├── {TIMESTAMP}/
│   ├── allure-results/       ← Test result JSON files
│   ├── allure-report/        ← Generated HTML report
│   ├── checkpoints/          ← Scan checkpoints written by tests
│   └── boolinfo.log          ← Test execution logs

Options:
    --run-large   also run the n=5 balanced scans (601,080,390 functions)
"""

import os
import sys
import time
from datetime import datetime
from pathlib import Path

import pytest
from dotenv import load_dotenv

# Load environment variables from .env file
env_file = Path(__file__).parent / ".env"
if env_file.exists():
    load_dotenv(env_file)

# Add project root to path for imports
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from boolinfo.core import BoolinfoLogger, get_environment_config, reset_environment_config  # noqa: E402

# ============================================================
# Global Variables for Report Management
# ============================================================

UNIQUE_RUN_ID = datetime.now().strftime("%Y%m%d_%H%M%S")
REPORTS_ROOT = project_root / "reports"


def pytest_addoption(parser):
    """Opt-in switch for the long n=5 scans."""
    parser.addoption(
        "--run-large",
        action="store_true",
        default=False,
        help="run tests marked 'large' (exhaustive n=5 balanced scans)",
    )


def pytest_configure(config):
    """Create the per-run reports directory and configure logging."""
    worker_id = os.getenv("PYTEST_XDIST_WORKER", None)

    if worker_id and worker_id != "master":
        reports_dir = REPORTS_ROOT / f"{UNIQUE_RUN_ID}_{worker_id}"
    else:
        reports_dir = REPORTS_ROOT / UNIQUE_RUN_ID

    reports_dir.mkdir(exist_ok=True, parents=True)
    (reports_dir / "allure-results").mkdir(exist_ok=True)
    (reports_dir / "checkpoints").mkdir(exist_ok=True)

    config.reports_dir = reports_dir
    config.allure_results_dir = str(reports_dir / "allure-results")

    # Scans started by tests checkpoint inside the run directory
    os.environ.setdefault("BOOLINFO_CHECKPOINT_DIR", str(reports_dir / "checkpoints"))
    reset_environment_config()

    BoolinfoLogger.configure(
        log_level="INFO",
        log_file=str(reports_dir / "boolinfo.log"),
        console_output=True,
    )

    env_config = get_environment_config()
    print(f"\n{'='*80}")
    print(f"🚀 TEST SESSION" if not worker_id or worker_id == "master" else f"🔷 WORKER: {worker_id}")
    print(f"📁 Reports: {reports_dir}")
    print(f"⏰ Run ID: {UNIQUE_RUN_ID}")
    print(f"🔧 {env_config!r}")
    print(f"{'='*80}\n")


def pytest_collection_modifyitems(config, items):
    """Skip 'large' tests unless --run-large was given."""
    if config.getoption("--run-large"):
        return
    skip_large = pytest.mark.skip(reason="needs --run-large")
    for item in items:
        if "large" in item.keywords:
            item.add_marker(skip_large)


# ============================================================
# Fixtures
# ============================================================


@pytest.fixture
def fresh_config(monkeypatch):
    """
    Drop the cached EnvironmentConfig before and after a test, so BOOLINFO_*
    variables set with monkeypatch take effect and do not leak.
    """
    reset_environment_config()
    yield monkeypatch
    reset_environment_config()


@pytest.fixture
def checkpoint_dir(tmp_path, fresh_config):
    """Private checkpoint directory for one test."""
    target = tmp_path / "checkpoints"
    fresh_config.setenv("BOOLINFO_CHECKPOINT_DIR", str(target))
    reset_environment_config()
    return target


# ============================================================
# Auto-Generate Allure HTML Report
# ============================================================


def pytest_sessionstart(session):
    """Record session start time for filtering results."""
    session.config._session_start_time = time.time()


def pytest_sessionfinish(session, exitstatus):
    """Master process collects results and generates the Allure report."""
    worker_id = os.getenv("PYTEST_XDIST_WORKER", None)
    if not worker_id or worker_id == "master":
        _generate_allure_report_master(session.config)


def _generate_allure_report_master(config):
    """
    Copy this run's allure-results from reports/allure-results into the
    per-run directory and render the HTML report next to them.
    """
    import shutil
    import subprocess

    if not getattr(config, "reports_dir", None):
        return

    report_base_dir = Path(config.reports_dir)
    per_run_result_dir = report_base_dir / "allure-results"
    central_result_dir = REPORTS_ROOT / "allure-results"

    central_result_files = list(central_result_dir.glob("*-result.json")) if central_result_dir.exists() else []
    if central_result_files:
        session_start_time = getattr(config, "_session_start_time", 0)
        copied_count = 0
        for file in central_result_dir.iterdir():
            if file.is_file() and file.stat().st_mtime >= session_start_time:
                shutil.copy2(file, per_run_result_dir / file.name)
                copied_count += 1
        print(f"📋 Copied {copied_count} files from this test run")

    result_files = list(per_run_result_dir.glob("*-result.json"))
    if not result_files:
        return

    run_report_dir = report_base_dir / "allure-report"
    print(f"\n{'='*80}")
    print(f"✅ ALLURE RESULTS COLLECTED")
    print(f"{'='*80}")
    print(f"📁 Run: {report_base_dir.name}/")
    print(f"📊 Results: {len(result_files)} test result files")

    try:
        print(f"\n🚀 GENERATING ALLURE REPORT...")
        subprocess.run(
            ["allure", "generate", str(per_run_result_dir), "-o", str(run_report_dir), "--clean"],
            check=True,
            capture_output=True,
        )
        print(f"✅ HTML report generated successfully!")
        print(f"\n📖 VIEW REPORT: ./view_latest_report.sh")
        print(f"   📁 Report location: {report_base_dir.name}/allure-report/")
    except FileNotFoundError:
        print(f"\n⚠️ ERROR: 'allure' command not found. Install: npm install -g allure-commandline")
    except subprocess.CalledProcessError as e:
        print(f"\n⚠️ ERROR: Failed to generate report - {e}")

    print(f"{'='*80}\n")
