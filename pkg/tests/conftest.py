import math

import numpy as np
import pytest

from cogic.discrete.pmf import DiscreteChannel, JointPmf


def g(x):
    """Reference Gaussian kernel written with the math module."""
    return 0.5 * math.log2(1.0 + x)


@pytest.fixture
def parallel_channel():
    """Noiseless parallel channel Y1 = X1, Y2 = X2 on bits."""
    return DiscreteChannel.from_functions(2, 2, 2, 2, lambda a, b: a, lambda a, b: b)


@pytest.fixture
def constant_channel():
    return DiscreteChannel.from_functions(2, 2, 2, 2, lambda a, b: 0, lambda a, b: 0)


@pytest.fixture
def uniform_bits():
    def make(*names):
        n = len(names)
        return JointPmf(names, np.full((2,) * n, 0.5**n))

    return make


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


# one line per acceptance criterion, printed after the run
ACCEPTANCE_LINES = {}


def record_criterion(n, ok, msg):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {msg}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
