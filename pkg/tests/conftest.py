import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from leibal import LeibnizAlgebra  # noqa: E402

_ACCEPTANCE: dict[str, tuple[str, str, float]] = {}


def a2() -> LeibnizAlgebra:
    return LeibnizAlgebra.from_table(2, [(2, 2, 1, 1)])


def cyclic(k: int) -> LeibnizAlgebra:
    """``b, b², …, b^k`` with ``[b^i, b] = b^{i+1}`` and every other product zero."""
    labels = ["b"] + [f"b{i}" for i in range(2, k + 1)]
    return LeibnizAlgebra.from_table(k, [(i, 1, i + 1, 1) for i in range(1, k)], labels=labels)


def abelian(n: int) -> LeibnizAlgebra:
    return LeibnizAlgebra(n, {})


def three_dim_class3() -> LeibnizAlgebra:
    return LeibnizAlgebra.from_table(3, [(1, 3, 2, 1), (3, 3, 1, 1)])


def to_oracle(g: LeibnizAlgebra):
    import oracle

    return oracle.Algebra(g.dim, {ij: {k: c for k, c in v.items()} for ij, v in g.products.items()})


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key, title = marker.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _ACCEPTANCE[key] = ("PASS" if rep.passed else "FAIL", title, getattr(rep, "duration", 0.0))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(key, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE, key=lambda k: int(k[2:])):
        status, title, dur = _ACCEPTANCE[key]
        terminalreporter.write_line(f"[{status}] {key} {title} ({dur:.2f}s)")


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
