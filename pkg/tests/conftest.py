import pytest
from hypothesis import settings

from permclosure.subgroups import all_subgroups

# property tests do exact small computations; timing jitter should not flake them
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture(scope="session")
def s4_catalog():
    return all_subgroups(4)


@pytest.fixture(scope="session")
def s5_catalog():
    return all_subgroups(5)
