import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arcop.generate import random_family
from arcop.laws import PLANAR

settings.register_profile("arcop", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("arcop")

seeds = st.integers(min_value=0, max_value=2**32 - 1)
rationals = st.fractions(min_value=0, max_value=1, max_denominator=12)
positive = st.fractions(min_value=Fraction(1, 12), max_value=3, max_denominator=12)

BOUNDS = [
    dict(PLANAR, min_boundaries=2),
    {"genus": 1, "punctures": 1, "boundaries": 3, "arcs": 5, "min_boundaries": 2},
    {"genus": 0, "punctures": 2, "boundaries": 3, "arcs": 5, "min_boundaries": 2},
]


def family_from(seed, bounds=None):
    return random_family(seed, bounds or BOUNDS[0])


@pytest.fixture
def rng():
    return random.Random(20240517)
