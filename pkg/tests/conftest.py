import re

import pytest

from kummer7.curves import default_curve
from kummer7.kummer import expand_forms

_acceptance = {}


@pytest.fixture(scope="session")
def curve():
    return default_curve()


@pytest.fixture(scope="session")
def forms():
    """g3 and g2^B expanded past q^200."""
    return expand_forms(210)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    key = (int(m.group(1)), m.group(2))
    if report.when == "call" or report.failed:
        prev = _acceptance.get(key, "PASS")
        _acceptance[key] = "FAIL" if (report.failed or prev == "FAIL") else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for (n, name), status in sorted(_acceptance.items()):
        terminalreporter.write_line(f"criterion {n} [{name.replace('_', ' ')}]: {status}")
