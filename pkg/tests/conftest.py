from pathlib import Path

import pytest

from skewbrace import cyclic_group, make_almost_trivial, make_trivial, symmetric_group
from skewbrace.solutions import SolutionTable

DATA = Path(__file__).parent / 'data'


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture(scope='session')
def s3():
    return symmetric_group(3)


@pytest.fixture(scope='session')
def s3_almost(s3):
    return make_almost_trivial(s3)


@pytest.fixture(scope='session')
def z4():
    return make_trivial(cyclic_group(4))


@pytest.fixture(scope='session')
def shift2():
    return SolutionTable.from_function(2, lambda x, y: ((y + 1) % 2, (x + 1) % 2))
