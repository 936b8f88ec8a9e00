import pytest

from ringdet.rings import (INTEGERS, RATIONALS, ModularRing, PolynomialRing)


@pytest.fixture(scope="session")
def mod4():
    return ModularRing(4)


@pytest.fixture(scope="session")
def mod5():
    return ModularRing(5)


@pytest.fixture(scope="session")
def mod7():
    return ModularRing(7)


@pytest.fixture(scope="session")
def poly_abcd():
    return PolynomialRing(["a", "b", "c", "d"])


def all_rings():
    return [INTEGERS, RATIONALS, ModularRing(4), ModularRing(7),
            PolynomialRing(["a", "b"])]
