from pathlib import Path

import pytest

from biotimelines import Hyperparams, build_benchmark, build_schema, load_kg, train
from biotimelines.supervision import SOURCES

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def kg():
    return load_kg(FIXTURES / "mini_ekg")


@pytest.fixture(scope="session")
def benchmark(kg):
    return build_benchmark(kg, FIXTURES / "corpus")


@pytest.fixture(scope="session")
def schema(benchmark, kg):
    return build_schema(benchmark.records, kg)


@pytest.fixture(scope="session")
def models(benchmark, schema, kg):
    return {
        source: train(
            [r for r in benchmark.records if r.source == source], schema, kg, Hyperparams()
        )
        for source in SOURCES
    }


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    rows = []
    for outcome in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py" in nodeid:
                rows.append((nodeid.split("::")[-1], outcome == "passed"))
    if rows:
        terminalreporter.section("acceptance criteria")
        for name, ok in sorted(rows):
            terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
