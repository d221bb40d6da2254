import numpy as np
import pytest
from scipy.stats import unitary_group

from nonabsep.core import DensityOperator, Ket

ACCEPTANCE_LINES = []


def random_unitary(d, rng):
    return unitary_group.rvs(d, random_state=rng)


def random_ket(dims, rng):
    d = dims[0] * dims[1]
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    return Ket.normalized(v, dims)


def random_density(dims, rng, rank=None):
    d = dims[0] * dims[1]
    g = rng.normal(size=(d, rank or d)) + 1j * rng.normal(size=(d, rank or d))
    m = g @ g.conj().T
    return DensityOperator(m / np.trace(m).real, dims)


def random_hermitian(d, rng):
    g = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    return (g + g.conj().T) / 2


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if item.module.__name__ != "test_acceptance" or report.when != "call":
        return
    title = (item.function.__doc__ or item.name).strip().splitlines()[0]
    ACCEPTANCE_LINES.append(f"{'PASS' if report.passed else 'FAIL'}  {title}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
