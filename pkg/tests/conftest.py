import os

import pytest
from hypothesis import HealthCheck, settings

from irng.semigroups import band_corpus

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def bands4():
    return band_corpus(4)
