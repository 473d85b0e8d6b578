import os

import pytest
from hypothesis import HealthCheck, settings

from mackeypc.catalog import group as catalog_group

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SMALL_GROUPS = ["C1", "C2", "C3", "K4", "S3", "D4", "Q8"]


@pytest.fixture(params=SMALL_GROUPS)
def group_name(request):
    return request.param


@pytest.fixture
def any_group(group_name):
    return catalog_group(group_name)
