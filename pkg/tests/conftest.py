"""Shared fixtures: the family catalog and a few canonical inputs."""

import math

import pytest

from orlicz import MeasureSpace, SimpleFunction, make_family

# Every built-in family in spec form, with the verdict its construction implies
# on an infinite-measure space.
CATALOG_SPECS = (
    "power",
    "logbump",
    "logbump:p=2",
    "iterlog",
    "iterlog:N=2",
    "addie",
    "addie:N=2",
    "sinpiecewise",
    "powerlog_e",
)

STRICT_SPECS = CATALOG_SPECS  # identity is the lone non-strict entry


@pytest.fixture(scope="session")
def infinite_space():
    return MeasureSpace(math.inf)


@pytest.fixture
def two_atom(infinite_space):
    """The two-step function used throughout the convergence experiments."""
    return SimpleFunction(((3.0, 1.0), (1.0, 1.0)), infinite_space)


@pytest.fixture(params=CATALOG_SPECS)
def catalog_family(request):
    return make_family(request.param)
