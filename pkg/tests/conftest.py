import pytest

from gklab import catalog
from gklab.elements import perm_from_cycles


@pytest.fixture(scope="session")
def s3():
    return catalog.sym(3)


@pytest.fixture(scope="session")
def s4():
    return catalog.sym(4)


@pytest.fixture(scope="session")
def q8():
    return catalog.quaternion8()


@pytest.fixture(scope="session")
def c5():
    return catalog.cyclic(5)


@pytest.fixture(scope="session")
def c7c3():
    return catalog.c7_c3()


@pytest.fixture(scope="session")
def c7c6():
    return catalog.c7_c6()


@pytest.fixture(scope="session")
def a5():
    return catalog.alt(5)


@pytest.fixture(scope="session")
def seven_cycle():
    return perm_from_cycles(7, [[1, 2, 3, 4, 5, 6, 7]])
