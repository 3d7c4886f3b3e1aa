import numpy as np
import pytest

from cogic.errors import InfeasibleSystem, UnboundedRegion
from cogic.geometry import (
    Envelope,
    HalfPlaneSystem,
    convex_hull,
    envelope_from_halfplanes,
    envelope_vertex_oracle,
    intersection,
    max_deviation,
    polygon_vertices,
    subset,
    union,
    union_all,
)


def box(a, b, grid=64):
    return envelope_from_halfplanes(HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], a), ([0, 1], b)]), grid)


def test_pentagon_corners():
    sys = HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 1), ([0, 1], 1), ([1, 1], 1.5)])
    V = {tuple(v) for v in polygon_vertices(sys).round(12)}
    assert (1.0, 0.5) in V and (0.5, 1.0) in V
    env = envelope_from_halfplanes(sys)
    assert env.value_at(1.0) == pytest.approx(0.5)
    assert env.value_at(0.5) == pytest.approx(1.0)
    assert env.value_at(0.75) == pytest.approx(0.75)
    assert env.r1_max == 1.0


def test_zero_caps_give_point():
    env = envelope_from_halfplanes(HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 0), ([0, 1], 0)]))
    assert env == Envelope.point(0.0, 0.0)


def test_infeasible_and_unbounded():
    with pytest.raises(InfeasibleSystem):
        envelope_from_halfplanes(HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], -1), ([0, 1], 1)]))
    with pytest.raises(UnboundedRegion):
        envelope_from_halfplanes(HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 1)]))


def test_union_staircase_and_hull():
    a = Envelope.from_rectangles([1.0], [0.2])
    b = Envelope.from_rectangles([0.2], [1.0])
    u = union(a, b)
    assert u.value_at(0.2) == pytest.approx(1.0)
    assert u.value_at(0.5) == pytest.approx(0.2)
    assert u.value_at(1.0) == pytest.approx(0.2)
    h = convex_hull(u)
    # segment from (0.2, 1) to (1, 0.2)
    assert h.value_at(0.6) == pytest.approx(0.6)
    assert h.value_at(0.1) == pytest.approx(1.0)


def test_hull_of_concave_is_fixed_point():
    sys = HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 1), ([0, 1], 1), ([1, 1], 1.5)])
    env = envelope_from_halfplanes(sys)
    assert max_deviation(convex_hull(env), env) < 1e-12


def test_deviation_of_rectangles():
    assert max_deviation(box(1, 1), box(1, 1)) == 0.0
    assert max_deviation(box(1, 1), box(1, 0.9)) == pytest.approx(0.1)


def test_subset_reports_violation():
    r = subset(box(1, 1), box(1, 0.9), tol=5e-3)
    assert not r and r.max_violation == pytest.approx(0.1)
    assert subset(box(1, 0.9), box(1, 1))
    # horizontal overshoot counts too
    assert not subset(box(1.2, 0.5), box(1, 1))


def test_intersection_of_boxes():
    e = intersection(box(1, 0.5), box(0.5, 1))
    assert e.r1_max == pytest.approx(0.5)
    assert e.r2_top == pytest.approx(0.5)


def test_union_all_matches_pairwise():
    envs = [box(1, 0.2), box(0.2, 1), box(0.6, 0.6)]
    assert max_deviation(union_all(envs), union(union(envs[0], envs[1]), envs[2])) < 1e-12


def test_csv_round_trip():
    sys = HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 1), ([0, 1], 1), ([1, 1], 1.5)])
    env = envelope_from_halfplanes(sys, grid=17)
    back = Envelope.from_csv(env.to_csv())
    assert back == env
    with pytest.raises(ValueError):
        Envelope.from_csv("a,b\n0,1\n")


def test_envelope_rejects_bad_grid():
    with pytest.raises(ValueError):
        Envelope([0.1, 0.2], [1, 1])
    with pytest.raises(ValueError):
        Envelope([0.0, 0.0], [1, 1])


def test_system_json_round_trip():
    sys = HalfPlaneSystem.from_rows(["R1", "R2", "T"], [({"R1": 1, "T": -1}, 0.5), ({"R2": 1}, 2.0)], ["a", "b"])
    back = HalfPlaneSystem.from_json(sys.to_json())
    assert back.vars == sys.vars
    np.testing.assert_array_equal(back.A, sys.A)
    np.testing.assert_array_equal(back.c, sys.c)


def test_vertex_oracle_agrees_on_pentagon():
    sys = HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], 1), ([0, 1], 1), ([1, 1], 1.5), ([2, 1], 2.2)])
    env = envelope_from_halfplanes(sys)
    x = np.linspace(0, env.r1_max, 23)
    np.testing.assert_allclose(env.value_at(x), envelope_vertex_oracle(sys, x), atol=1e-9)
