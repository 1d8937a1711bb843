from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from tourlen import Instance

REPO_ROOT = Path(__file__).resolve().parents[1]
DATA_DIR = REPO_ROOT / "data"
TSPLIB_DIR = DATA_DIR / "tsplib"
REPORTED_CSV = DATA_DIR / "reported_values.csv"

# outcome collector for the acceptance criteria summary
_ACCEPTANCE: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "acceptance(num, description): ties a test to one acceptance criterion",
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.skipped):
        num, description = marker.args
        entry = _ACCEPTANCE.setdefault(
            num, {"description": description, "outcomes": []}
        )
        entry["outcomes"].append(report.outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        entry = _ACCEPTANCE[num]
        outcomes = entry["outcomes"]
        if "failed" in outcomes:
            status = "FAIL"
        elif "passed" in outcomes:
            skips = outcomes.count("skipped")
            status = "PASS" if not skips else f"PASS ({skips}/{len(outcomes)} parts skipped: data unavailable)"
        else:
            status = "SKIP"
        terminalreporter.write_line(f"criterion {num}: {status} - {entry['description']}")


@pytest.fixture(scope="session")
def tsplib_dir() -> Path:
    if not TSPLIB_DIR.is_dir():
        pytest.skip("bundled TSPLIB corpus not present")
    return TSPLIB_DIR


@pytest.fixture(scope="session")
def reported_csv() -> Path:
    if not REPORTED_CSV.is_file():
        pytest.skip("bundled reported-values CSV not present")
    return REPORTED_CSV


def require_corpus_file(name: str) -> Path:
    """Path to a bundled corpus file, skipping when it is unavailable."""
    path = TSPLIB_DIR / name
    if not path.is_file():
        pytest.skip(f"{name} is not available in this environment")
    return path


def random_instance(rng: np.random.Generator, n: int, d: int = 2,
                    scale: float = 100.0) -> Instance:
    """Uniform random point set; resamples the rare duplicate collision."""
    while True:
        points = rng.uniform(0.0, scale, size=(n, d))
        if np.unique(points, axis=0).shape[0] == n:
            return Instance(name=f"rand{n}", points=points)
