import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("det")

from agroups import FamilyParams, build_family_group
from agroups.steinitz import steinitz_report


@pytest.fixture(scope="session")
def family1():
    return build_family_group(FamilyParams(5, 2, 3, 2, 4))


@pytest.fixture(scope="session")
def family2():
    return build_family_group(FamilyParams(13, 3, 2, 1, 3))


@pytest.fixture(scope="session")
def steinitz1(family1):
    return steinitz_report(family1)


@pytest.fixture(scope="session")
def steinitz2(family2):
    return steinitz_report(family2)
