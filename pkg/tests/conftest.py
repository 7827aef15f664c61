import pytest
from hypothesis import settings

from diflip import medial_fixture

settings.register_profile("suite", deadline=None, max_examples=25)
settings.load_profile("suite")


@pytest.fixture
def d2():
    return medial_fixture("D2")


@pytest.fixture
def c3x2():
    return medial_fixture("C3x2")


@pytest.fixture
def c4x2():
    return medial_fixture("C4x2")


@pytest.fixture
def looplink():
    return medial_fixture("LOOPLINK")
