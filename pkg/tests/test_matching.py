import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bncm.errors import DuplicatePoints, IndexOutOfRange, OddCardinality
from bncm.matching import Matching, as_pointset, bottleneck, is_noncrossing, is_perfect

from conftest import unit_square


def test_bottleneck_examples():
    assert bottleneck(Matching.from_pairs([(0, 1), (2, 3)]), [(0, 0), (1, 0), (0, 5), (0, 6)]) == 1
    assert bottleneck(Matching.from_pairs([(0, 1)]), [(0, 0), (3, 4)]) == 5
    assert bottleneck(Matching.from_pairs([(0, 2), (1, 3)]), unit_square()) == pytest.approx(math.sqrt(2))


def test_is_perfect_examples():
    four = unit_square()
    assert is_perfect(Matching.from_pairs([(0, 1), (2, 3)]), four)
    assert not is_perfect(Matching.from_pairs([(0, 1)]), four)
    assert is_perfect(Matching.from_pairs([(0, 1)]), [(0, 0), (1, 1)])


def test_is_noncrossing_examples():
    sq = unit_square()
    assert is_noncrossing(Matching.from_pairs([(0, 3), (1, 2)]), sq)
    assert not is_noncrossing(Matching.from_pairs([(0, 2), (1, 3)]), sq)
    assert is_noncrossing(Matching.from_pairs([(0, 1)]), sq)


def test_matching_rejects_reused_vertex():
    with pytest.raises(ValueError):
        Matching.from_pairs([(0, 1), (1, 2)])


def test_bad_indices():
    with pytest.raises(IndexOutOfRange):
        bottleneck(Matching.from_pairs([(0, 7)]), unit_square())


def test_mate_round_trip():
    m = Matching.from_pairs([(3, 0), (1, 2)])
    assert Matching.from_mate(m.mate(4)) == m


def test_pointset_validation():
    with pytest.raises(OddCardinality):
        as_pointset([(0, 0), (1, 1), (2, 2)], even=True)
    with pytest.raises(DuplicatePoints):
        as_pointset([(0, 0), (0, 0)], even=True)


@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_bottleneck_invariant_under_relabeling(k, seed):
    rng = np.random.default_rng(seed)
    pts = rng.random((2 * k, 2))
    m = Matching.from_pairs(rng.permutation(2 * k).reshape(-1, 2).tolist())
    perm = rng.permutation(2 * k)          # new index of old point i is perm[i]
    pts2 = np.empty_like(pts)
    pts2[perm] = pts
    m2 = Matching.from_pairs((perm[i], perm[j]) for i, j in m.pairs)
    assert bottleneck(m2, pts2) == bottleneck(m, pts)
    assert is_noncrossing(m2, pts2) == is_noncrossing(m, pts)
