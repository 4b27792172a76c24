import numpy as np
import pytest


def random_joint(rng, nx=4, ny=4, sparsity=0.0):
    m = rng.random((nx, ny))
    if sparsity:
        m[rng.random((nx, ny)) < sparsity] = 0.0
        if m.sum() == 0:
            m[0, 0] = 1.0
    return (m / m.sum()).tolist()


def random_dist(rng, n, zeros=False):
    p = rng.random(n)
    if zeros:
        p[rng.random(n) < 0.3] = 0.0
        if p.sum() == 0:
            p[0] = 1.0
    return (p / p.sum()).tolist()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


_criteria: dict[str, list[bool]] = {}
_reports: list[str] = []


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    names = [v for k, v in report.user_properties if k == "criterion"]
    for name in names:
        _criteria.setdefault(name, []).append(report.passed)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            item.user_properties.append(("criterion", mark.args[0]))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion this test belongs to")


def record(line):
    _reports.append(line)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_criteria, key=lambda s: int(s.split(".")[0])):
        ok = all(_criteria[name])
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}")
    for line in _reports:
        terminalreporter.write_line(f"report: {line}")
