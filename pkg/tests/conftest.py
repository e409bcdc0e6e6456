import pytest

from ecgroups.field import FieldSpec


@pytest.fixture(scope="session")
def F5():
    return FieldSpec(5)


@pytest.fixture(scope="session")
def F7():
    return FieldSpec(7)


@pytest.fixture(scope="session")
def F13():
    return FieldSpec(13)


@pytest.fixture(scope="session")
def F8():
    return FieldSpec(2, 3, (1, 1, 0, 1))


@pytest.fixture(scope="session")
def F9():
    return FieldSpec(3, 2, (1, 0, 1))
