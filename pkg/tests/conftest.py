import re
from collections import defaultdict

import pytest

from mforge import catalog

_ACCEPT = re.compile(r"test_acceptance\.py::test_criterion_(\d+)_")
_results: dict[int, list[bool]] = defaultdict(list)
_names: dict[int, str] = {}


def v(i, j, sign=1):
    """sign * (4 e_i + 4 e_j - (1, ..., 1)) in dimension 8, built from scratch."""
    return tuple(sign * (4 * ((k == i) + (k == j)) - 1) for k in range(8))


@pytest.fixture(scope="session")
def e7():
    return catalog.hesse(affine=False)


@pytest.fixture(scope="session")
def e7_affine():
    return catalog.hesse()


@pytest.fixture(scope="session")
def e6_plus():
    return catalog.schlafli(8)


@pytest.fixture(scope="session")
def e6_minus():
    return catalog.schlafli(-8)


def pytest_runtest_logreport(report):
    m = _ACCEPT.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        k = int(m.group(1))
        _results[k].append(report.outcome == "passed")
        _names.setdefault(k, report.nodeid.split("::")[-1].split("[")[0])


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(_results):
        ok = all(_results[k])
        terminalreporter.write_line(f"criterion {k}: {'PASS' if ok else 'FAIL'} ({_names[k]}, {len(_results[k])} cases)")
