import random

import pytest
from hypothesis import settings

from nodecycles.model import SystemParams

settings.register_profile("repo", max_examples=60, deadline=None)
settings.load_profile("repo")

# the family used throughout for the exactly-two regime
FAMILY = (2.0, -3.0, 1.0, -1.4)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def family():
    return SystemParams(*FAMILY, 0.0)
