import pytest

import perspectra as ps


@pytest.fixture(scope="session")
def census_report():
    """Full n=4 census, computed once per test session."""
    return ps.full_census()


@pytest.fixture(scope="session")
def c4_realization():
    return ps.parametric_realization("c4", {"beta2": 2, "x": 2, "y": 2})


@pytest.fixture(scope="session")
def c3f_realization():
    return ps.parametric_realization("c3f", {"beta1": 5, "beta2": 2, "y": 2})
