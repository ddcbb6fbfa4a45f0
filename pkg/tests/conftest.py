import numpy as np
import pytest

from ordered_theta.builder import build
from ordered_theta.instances import make_backtrack_demo, make_fig3, make_lr, random_points

SUITE_SIZE = 200
SUITE_SEED = 20240611


@pytest.fixture(scope="session")
def fig3():
    return build(make_fig3(), 4)


@pytest.fixture(scope="session")
def four():
    """Three-point instance plus v4 = (-2, 1); edges {1,2}, {2,3}, {1,4}."""
    return build(make_backtrack_demo(), 4)


@pytest.fixture(scope="session")
def lr14():
    pair = make_lr(1, 4)
    left, right = pair.graphs()
    return pair, left, right


def make_suite(size=SUITE_SIZE, seed=SUITE_SEED):
    """Seeded random instances with n in 2..256 and k in 2..12."""
    rng = np.random.default_rng(seed)
    suite = []
    for i in range(size):
        n = int(rng.integers(2, 257))
        k = int(rng.integers(2, 13))
        pts = random_points(n, seed=seed + i, ks=(k,))
        suite.append((pts, k))
    return suite


@pytest.fixture(scope="session")
def suite():
    return [(pts, build(pts, k)) for pts, k in make_suite()]



ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail=""):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
