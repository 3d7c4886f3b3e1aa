"""Randomized invariants: kernel identity, information identities, envelope algebra, projection soundness."""

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from cogic.discrete.pmf import JointPmf, mutual_information
from cogic.fm import project
from cogic.gaussian import gamma
from cogic.geometry import (
    Envelope,
    HalfPlaneSystem,
    convex_hull,
    envelope_from_halfplanes,
    envelope_vertex_oracle,
    max_deviation,
    subset,
    union,
)

nonneg = st.floats(min_value=0.0, max_value=1e4, allow_nan=False)
seeds = st.integers(min_value=0, max_value=2**32 - 1)


@given(nonneg, nonneg)
def test_gamma_composition(a, b):
    assert abs(gamma(a) + gamma(b / (1.0 + a)) - gamma(a + b)) <= 1e-10 * max(1.0, gamma(a + b))


@given(nonneg, nonneg)
def test_gamma_monotone(a, b):
    lo, hi = sorted((a, b))
    assert gamma(lo) <= gamma(hi)


def random_joint(seed, sizes=(2, 3, 2)):
    rng = np.random.default_rng(seed)
    t = rng.dirichlet(np.full(int(np.prod(sizes)), 0.5)).reshape(sizes)
    return JointPmf(["A", "B", "C"], t)


@given(seeds)
def test_mi_nonnegative(seed):
    p = random_joint(seed)
    assert mutual_information(p, "A", "B") >= -1e-10
    assert mutual_information(p, "A", "B", "C") >= -1e-10
    assert mutual_information(p, ["A", "C"], "B") >= -1e-10


@given(seeds)
def test_mi_chain_rule(seed):
    p = random_joint(seed)
    lhs = mutual_information(p, "A", ["B", "C"])
    rhs = mutual_information(p, "A", "B") + mutual_information(p, "A", "C", "B")
    assert abs(lhs - rhs) <= 1e-10


@given(seeds)
def test_mi_symmetric(seed):
    p = random_joint(seed)
    assert abs(mutual_information(p, "A", "C", "B") - mutual_information(p, "C", "A", "B")) <= 1e-12


@st.composite
def envelopes(draw):
    n = draw(st.integers(1, 6))
    caps = st.floats(min_value=0.0, max_value=3.0, allow_nan=False)
    a = draw(st.lists(caps, min_size=n, max_size=n))
    b = draw(st.lists(caps, min_size=n, max_size=n))
    return Envelope.from_rectangles(a, b, grid=17)


@settings(max_examples=60)
@given(envelopes(), envelopes(), envelopes())
def test_union_laws(a, b, c):
    assert max_deviation(union(a, b), union(b, a)) == 0.0
    assert max_deviation(union(a, a), a) <= 1e-12
    assert max_deviation(union(union(a, b), c), union(a, union(b, c))) <= 1e-12
    assert subset(a, union(a, b), 1e-12)
    assert subset(b, union(a, b), 1e-12)


@settings(max_examples=60)
@given(envelopes(), envelopes())
def test_hull_laws(a, b):
    h = convex_hull(a)
    assert subset(a, h, 1e-12)
    assert max_deviation(convex_hull(h), h) <= 1e-12
    assert subset(convex_hull(a), convex_hull(union(a, b)), 1e-9)
    assert max_deviation(a, b) == max_deviation(b, a)
    assert max_deviation(a, a) == 0.0


@st.composite
def polygons(draw):
    """2-D systems {A x <= c} with positive right-hand sides and caps on both axes."""
    k = draw(st.integers(0, 4))
    pos = st.floats(min_value=0.05, max_value=3.0, allow_nan=False)
    rows = [([1.0, 0.0], draw(pos)), ([0.0, 1.0], draw(pos))]
    for _ in range(k):
        a = [draw(st.floats(min_value=-1.0, max_value=2.0)), draw(st.floats(min_value=-1.0, max_value=2.0))]
        rows.append((a, draw(pos)))
    return HalfPlaneSystem.from_rows(["R1", "R2"], rows)


@settings(max_examples=80, deadline=None)
@given(polygons())
def test_envelope_matches_vertex_oracle(sys):
    env = envelope_from_halfplanes(sys, grid=21)
    x = np.linspace(0.0, env.r1_max, 9)
    np.testing.assert_allclose(env.value_at(x), envelope_vertex_oracle(sys, x), atol=1e-9)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_projection_soundness(seed):
    rng = np.random.default_rng(seed)
    n, m = 4, 6
    A = np.vstack([rng.normal(size=(m, n)), np.eye(n), -np.eye(n)])
    c = np.concatenate([rng.uniform(0.2, 2.0, m), np.full(2 * n, 3.0)])
    sys = HalfPlaneSystem.from_rows([f"x{i}" for i in range(n)], list(zip(A, c)))
    out = project(sys, ["x0", "x1"]).output
    pts = rng.uniform(-3, 3, (400, n))
    feas = pts[np.all(pts @ A.T <= c, axis=1)]
    assert np.all(feas[:, :2] @ out.A.T <= out.c + 1e-9)
