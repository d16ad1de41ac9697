import math
import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from bncm.matching import Matching

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=300)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

SQ8 = 2 * math.sqrt(2)  # cell side for delta = 1


def unit_square():
    return np.array([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])


def paired_instance(rng, k, scale=10.0):
    """k random segments of length <= 1 (one of exactly 1) and the matching
    that pairs their endpoints."""
    c = rng.random((k, 2)) * scale
    ang = rng.random(k) * 2 * math.pi
    length = rng.random(k) ** 0.3
    length[0] = 1.0
    q = c + np.c_[np.cos(ang), np.sin(ang)] * length[:, None]
    return np.vstack([c, q]), Matching.from_pairs((i, i + k) for i in range(k))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
