import pytest

from e6wb.lie import StructureContext
from e6wb.verify import Workbench


@pytest.fixture(scope="session")
def ctx():
    return StructureContext()


@pytest.fixture(scope="session")
def wb(ctx):
    return Workbench(ctx)


@pytest.fixture(scope="session")
def base(wb):
    return wb.base


@pytest.fixture(scope="session")
def atlas(wb):
    return wb.atlas


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid and rep.when == "call":
                name = nodeid.split("::test_criterion_")[1]
                num, _, what = name.partition("_")
                lines.append((int(num), what.replace("_", " "), "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for num, what, status in sorted(lines):
            terminalreporter.write_line(f"criterion {num:2d} {status}  {what}")
