import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "exact",
    max_examples=40,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("exact")


@pytest.fixture
def rng():
    return random.Random(20240601)
