import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from models.param_set import ParamSet  # noqa: E402
from param_sampler import random_draws, random_param_sets  # noqa: E402


@pytest.fixture
def reference_params() -> ParamSet:
    return ParamSet(1, Fraction(1, 2), Fraction(1, 4), Fraction(1, 4))


@pytest.fixture(scope="session")
def generic_params():
    return random_param_sets(seed=7, count=3)


@pytest.fixture(scope="session")
def generic_draws():
    return random_draws(seed=7, count=3, alphas_per_set=1)
