import numpy as np
import pytest

from varchain.panel import SeriesPanel, synthetic_demo_panel
from varchain.var import simulate_var


def random_stable_coef(rng, m, p, radius=0.9):
    """Random VAR(p) coefficients rescaled so the companion spectral radius is `radius`."""
    coef = rng.normal(scale=0.4, size=(p, m, m))
    comp = np.zeros((m * p, m * p))
    comp[:m] = np.hstack(coef)
    comp[m:, :-m] = np.eye(m * (p - 1))
    rho = max(abs(np.linalg.eigvals(comp)))
    if rho >= radius:
        # scaling A_i by c**i scales every root by c
        c = radius / rho
        coef = np.stack([coef[i] * c ** (i + 1) for i in range(p)])
    return coef


def random_spd(rng, m):
    a = rng.normal(size=(m, m))
    return a @ a.T + m * np.eye(m)


def make_panel(y, labels=None, start=1950):
    T, m = y.shape
    labels = labels or [f"Y{i}" for i in range(m)]
    return SeriesPanel(labels, range(start, start + T), y)


def simulated_panel(rng, m=3, p=2, T=200, intercept=True):
    coef = random_stable_coef(rng, m, p)
    sigma = random_spd(rng, m)
    c = rng.normal(size=m) if intercept else None
    y = simulate_var(coef, sigma, T, intercept=c, rng=rng)
    return make_panel(y)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture(scope="session")
def demo_panel():
    return synthetic_demo_panel()


# One summary line per acceptance criterion, printed after the run.
_ACCEPTANCE = {}
_OBSERVED = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        name = report.nodeid.split("::")[-1]
        for key, value in report.user_properties:
            if key == "observed":
                _OBSERVED[name] = value
        prev = _ACCEPTANCE.get(name, "PASS")
        _ACCEPTANCE[name] = "FAIL" if (report.failed or prev == "FAIL") else "PASS"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    from test_acceptance import CRITERIA

    terminalreporter.section("acceptance criteria")
    for name, (number, text) in sorted(CRITERIA.items(), key=lambda kv: kv[1][0]):
        status = _ACCEPTANCE.get(name, "NOT RUN")
        seen = f" (observed: {_OBSERVED[name]})" if name in _OBSERVED else ""
        terminalreporter.write_line(f"[{status}] {number:2d}. {text}{seen}")
