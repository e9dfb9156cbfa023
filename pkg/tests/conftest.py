import pytest

from pseudofield.field import GF


@pytest.fixture
def F13():
    return GF(13)


@pytest.fixture
def F199():
    return GF(199)
