import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from qmzv.families import family_eulerian, family_okounkov, family_monomial  # noqa: E402


@pytest.fixture
def eulerian():
    return family_eulerian()


@pytest.fixture
def okounkov():
    return family_okounkov()


@pytest.fixture
def monomial():
    return family_monomial()
