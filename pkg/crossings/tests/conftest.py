import pytest

from crossings.models import Graph
from crossings.tests.helpers import complete, family


@pytest.fixture
def two_edges() -> Graph:
    return family("pairing", 2)


@pytest.fixture
def path4() -> Graph:
    return family("path", 4)


@pytest.fixture
def k3() -> Graph:
    return complete(3)
