import pytest

from pathidem.rings import Ring
from pathidem.sweep import q_a3, q_arrow, q_isolated


@pytest.fixture
def f2():
    return Ring("Fp", 2)


@pytest.fixture
def f3():
    return Ring("Fp", 3)


@pytest.fixture
def f5():
    return Ring("Fp", 5)


@pytest.fixture
def z6():
    return Ring("Zn", 6)


@pytest.fixture
def rationals():
    return Ring("Q")


@pytest.fixture
def arrow():
    return q_arrow()


@pytest.fixture
def a3():
    return q_a3()


@pytest.fixture
def two_isolated():
    return q_isolated(2)
