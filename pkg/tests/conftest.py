import pytest

from subarr.fixtures import example1, example2


@pytest.fixture
def ex1():
    return example1()


@pytest.fixture
def ex2():
    return example2()
