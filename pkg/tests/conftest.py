import pytest

import skewlin.skew as skew
from skewlin import FiniteField


@pytest.fixture(autouse=True, scope="session")
def division_checks():
    """Multiply back every quotient/remainder pair for the whole run."""
    old = skew.CHECK_DIVISION
    skew.CHECK_DIVISION = True
    yield
    skew.CHECK_DIVISION = old


@pytest.fixture(scope="session")
def gf2():
    return FiniteField(2, 1)


@pytest.fixture(scope="session")
def gf4():
    return FiniteField(2, 2)


@pytest.fixture(scope="session")
def gf8():
    return FiniteField(2, 3)


@pytest.fixture(scope="session")
def gf9():
    return FiniteField(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return FiniteField(2, 4)


@pytest.fixture(scope="session")
def gf27():
    return FiniteField(3, 3)


@pytest.fixture(scope="session")
def gf64():
    return FiniteField(2, 6)


@pytest.fixture(scope="session")
def gf256():
    return FiniteField(2, 8)
