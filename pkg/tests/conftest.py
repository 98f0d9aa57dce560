from fractions import Fraction

import pytest

from cfrac.exact import GaussianInt
from cfrac.expansion import expand_hurwitz, expand_real

_ENV_VARS = (
    "CF_ENVIRONMENT", "CF_DEBUG", "CF_LOG_LEVEL", "CF_MAX_STEPS",
    "CF_MAX_HOUSEHOLDER_ORDER", "CF_SEED", "CF_IDENTITY_TRIALS",
    "CF_IDENTITY_MAX_K", "CF_BENCH_REPEATS", "CF_BENCH_WORKERS",
    "CF_BENCH_ORDERING_MIN_M", "CF_RECORD_TIMINGS",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Every test starts from the documented defaults"""
    for name in _ENV_VARS:
        monkeypatch.delenv(name, raising=False)


@pytest.fixture(scope="session")
def sqrt2():
    return expand_real(0, 1, 1, 2)


@pytest.fixture(scope="session")
def sqrt7():
    return expand_real(0, 1, 1, 7)


@pytest.fixture(scope="session")
def example_real():
    """(4 + sqrt(3)/2)/3 = [1, 1, 1, 1, (1, 1, 4, 1, 1, 2, 20, 2)]"""
    return expand_real(Fraction(4, 3), Fraction(1, 6), 1, 3)


@pytest.fixture(scope="session")
def example_gaussian():
    """sqrt(9 + 10i), Hurwitz expansion of period 12"""
    return expand_hurwitz(GaussianInt(9, 10))
