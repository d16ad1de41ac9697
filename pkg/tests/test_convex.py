import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bncm.convex import check_convex_order, fill_table, solve_convex, weight
from bncm.errors import NotConvexPosition, OddCardinality
from bncm.instances import InstanceSpec, generate
from bncm.matching import is_noncrossing, is_perfect
from bncm.oracle import exact_bncm

from conftest import unit_square


def hexagon():
    return [(math.cos(k * math.pi / 3), math.sin(k * math.pi / 3)) for k in range(6)]


def test_order_is_clockwise_from_least_point():
    inst = check_convex_order(unit_square())
    assert inst.order == (0, 3, 2, 1)


def test_non_convex_rejected():
    with pytest.raises(NotConvexPosition):
        check_convex_order(np.vstack([unit_square(), [(0.5, 0.5)]]))


def test_two_points_are_convex():
    assert check_convex_order([(1, 1), (0, 0)]).order == (1, 0)


def test_weight_parity():
    inst = check_convex_order(unit_square())
    p = inst.points[list(inst.order)]
    assert weight(1, 2, inst) == pytest.approx(((p[0] - p[1]) ** 2).sum())
    assert weight(1, 3, inst) == math.inf
    assert weight(2, 3, inst) == pytest.approx(((p[1] - p[2]) ** 2).sum())


@pytest.mark.parametrize("pts,bn", [
    (unit_square(), 1.0),
    ([(0, 0), (3, 0), (3, 1), (0, 1)], 1.0),
    (hexagon(), 1.0),
])
def test_solve_convex_examples(pts, bn):
    _, got = solve_convex(check_convex_order(pts))
    assert got == pytest.approx(bn, rel=1e-12)


def test_odd_rejected():
    pts = [(math.cos(a), math.sin(a)) for a in (0, 2, 4)]
    with pytest.raises(OddCardinality):
        solve_convex(check_convex_order(pts))


def test_table_has_no_gaps_at_used_entries():
    inst = check_convex_order(generate(InstanceSpec("convex", 10, 1)))
    t = fill_table(inst)
    n = len(inst.order)
    for i in range(n + 1):
        for j in range(i, n + 1, 2):
            assert not math.isnan(t.best2[i, j])


@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_solve_convex_is_optimal(k, seed):
    pts = generate(InstanceSpec("convex", k, seed))
    inst = check_convex_order(pts)
    m, bn = solve_convex(inst)
    assert is_perfect(m, pts) and is_noncrossing(m, pts)
    assert bn * bn == exact_bncm(pts)[1] ** 2
    rank = {v: r + 1 for r, v in enumerate(inst.order)}
    assert all((rank[i] + rank[j]) % 2 == 1 for i, j in m.pairs)
