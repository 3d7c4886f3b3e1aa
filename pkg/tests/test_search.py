import json

import numpy as np
import pytest

from cogic.discrete.pmf import DiscreteChannel
from cogic.discrete.reductions import semidet_inner_spec
from cogic.discrete.specs import SPECS
from cogic.geometry import subset
from cogic.search import SearchConfig, frontier, maximize_weighted_rate, support

FAST = SearchConfig(restarts=2, min_step=1e-3, weight_sweep=((1, 0), (1, 1), (0, 1)), seed=5)


def test_config_validation_and_json():
    with pytest.raises(ValueError):
        SearchConfig(restarts=0)
    with pytest.raises(ValueError):
        SearchConfig(mode="annealing")
    cfg = SearchConfig(restarts=3, weight_sweep=((1, 2),), sizes={"U": 3})
    assert SearchConfig.from_json(cfg.to_json()) == cfg
    assert json.loads(cfg.to_json())["restarts"] == 3


def test_bad_weights(parallel_channel):
    with pytest.raises(ValueError):
        maximize_weighted_rate(SPECS["outer"], parallel_channel, (0, 0), FAST)
    with pytest.raises(ValueError):
        maximize_weighted_rate(SPECS["outer"], parallel_channel, (-1, 1), FAST)


def test_parallel_channel_single_user(parallel_channel):
    res = maximize_weighted_rate(SPECS["outer"], parallel_channel, (1, 0), FAST)
    assert res.value == pytest.approx(1.0, abs=1e-9)
    assert res.point.r1 == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("w", [(1, 0), (1, 1), (0, 1)])
def test_constant_channel_is_zero(constant_channel, w):
    res = maximize_weighted_rate(SPECS["outer"], constant_channel, w, FAST)
    assert res.value == pytest.approx(0.0, abs=1e-12)


def test_constant_channel_frontier(constant_channel):
    env = frontier(SPECS["outer"], constant_channel, FAST)
    assert env.r1_max == pytest.approx(0.0, abs=1e-12) and env.r2_top == pytest.approx(0.0, abs=1e-12)


def test_inner_frontier_is_square(parallel_channel):
    env = frontier(SPECS["inner_projected"], parallel_channel, FAST)
    assert env.r1_max == pytest.approx(1.0, abs=1e-3)
    assert env.value_at(env.r1_max) == pytest.approx(1.0, abs=1e-3)


def test_outer_frontier_contains_inner(parallel_channel):
    inner = frontier(SPECS["inner_projected"], parallel_channel, FAST)
    outer = frontier(SPECS["outer"], parallel_channel, FAST)
    assert subset(inner, outer, 1e-6)


def test_reproducible(rng):
    ch = DiscreteChannel(rng.dirichlet(np.ones(4), size=(2, 2)).reshape(2, 2, 2, 2))
    a = frontier(SPECS["outer"], ch, FAST)
    b = frontier(SPECS["outer"], ch, FAST)
    assert a == b
    ra = maximize_weighted_rate(SPECS["outer"], ch, (1, 2), FAST)
    rb = maximize_weighted_rate(SPECS["outer"], ch, (1, 2), FAST)
    assert ra.value == rb.value
    np.testing.assert_array_equal(ra.pmf.table, rb.pmf.table)


def test_monotone_in_budget(rng):
    ch = DiscreteChannel(rng.dirichlet(np.ones(4), size=(2, 2)).reshape(2, 2, 2, 2))
    small = frontier(SPECS["outer"], ch, FAST.replace(restarts=2))
    big = frontier(SPECS["outer"], ch, FAST.replace(restarts=4))
    assert subset(small, big, 0.0)


def test_grid_mode(parallel_channel):
    cfg = SearchConfig(mode="grid", grid_levels=2, min_step=1e-3, sizes={"U": 1})
    res = maximize_weighted_rate(SPECS["outer"], parallel_channel, (1, 1), cfg)
    assert res.value == pytest.approx(2.0, abs=1e-9)
    with pytest.raises(ValueError):
        maximize_weighted_rate(SPECS["outer"], parallel_channel, (1, 1), cfg.replace(grid_levels=50, sizes={}))


def test_support_function():
    from cogic.geometry import HalfPlaneSystem

    sys = HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 1), ([0, 1], 1), ([1, 1], 1.5)])
    val, pt = support(sys, (1, 1))
    assert val == pytest.approx(1.5)
    val, pt = support(sys, (1, 0))
    assert val == pytest.approx(1.0)


def test_semidet_inner_matches_outer():
    # y1 = x1, y2 = (x1, x2): receiver 2 sees both inputs
    ch = DiscreteChannel.from_functions(2, 2, 2, 4, lambda a, b: a, lambda a, b: 2 * a + b)
    inner, outer = semidet_inner_spec(), SPECS["outer"]
    for w in FAST.weight_sweep:
        a = maximize_weighted_rate(inner, ch, w, FAST).value
        b = maximize_weighted_rate(outer, ch, w, FAST).value
        assert a <= b + 1e-9
        assert b - a <= 2e-2
