import numpy as np
import pytest

from horadam_bi import ClassKind, ClassSpec, HoradamParams


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_spec(rng, kind=None):
    kind = kind or rng.choice(list(ClassKind))
    hi = 3.0 if kind is ClassKind.SSTAR else 1.0
    params = HoradamParams(*rng.uniform(-3, 3, 4))
    x = rng.choice([-1, 1]) * rng.uniform(0.1, 1.5)
    return ClassSpec(kind, float(rng.uniform(0, hi)), params, float(x))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
