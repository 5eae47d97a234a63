import pytest

from fareyarc import MappingClass


@pytest.fixture
def fig8():
    return MappingClass(2, 1, 1, 1)


@pytest.fixture
def trefoil():
    return MappingClass(1, 1, -1, 0)
