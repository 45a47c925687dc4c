import os
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from ydforge.catalog import builtin_data, builtin_hopf_algebras, builtin_yd_modules

settings.register_profile(
    "default",
    max_examples=int(os.environ.get("YDFORGE_EXAMPLES", "40")),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


@pytest.fixture(scope="session")
def hopfs():
    return builtin_hopf_algebras()


@pytest.fixture(scope="session")
def data():
    return builtin_data()


@pytest.fixture(scope="session")
def modules():
    return builtin_yd_modules()


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


# acceptance criteria: one summary line each

_CRITERIA: dict[int, dict] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion this test belongs to")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            n, title = mark.args
            _CRITERIA.setdefault(n, {"title": title, "outcomes": []})


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    for n, entry in _CRITERIA.items():
        if f"criterion_{n}_" in report.nodeid or report.nodeid.endswith(f"criterion_{n}"):
            entry["outcomes"].append((report.outcome, round(report.duration, 1)))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        entry = _CRITERIA[n]
        outs = entry["outcomes"]
        if not outs:
            status = "NOT RUN"
        else:
            status = "PASS" if all(o == "passed" for o, _ in outs) else "FAIL"
        secs = max((d for _, d in outs), default=0)
        terminalreporter.write_line(f"criterion {n}: {status}  {entry['title']}  (slowest part {secs}s)")
