import numpy as np
import pytest

from cogic.discrete.pmf import JointPmf, extend_with_channel
from cogic.discrete.reductions import region_envelope, with_constant
from cogic.discrete.specs import SPECS, H, I, evaluate, get_spec, rate_polygon
from cogic.errors import MissingAuxiliary
from cogic.geometry import envelope_from_halfplanes


def square_check(env, side=1.0, tol=1e-12):
    assert env.r1_max == pytest.approx(side, abs=tol)
    assert env.value_at(env.r1_max) == pytest.approx(side, abs=tol)


def test_expression_algebra(uniform_bits):
    p = uniform_bits("A", "B")
    assert (I("A", "B") + H("A")).value(p) == pytest.approx(1.0)
    assert (2 * H("A", "B") - H("A")).value(p) == pytest.approx(1.0)
    assert str(I("A", "B", "C")) == "I(A;B|C)"


def test_inner_bound_on_parallel_channel(parallel_channel, uniform_bits):
    spec = get_spec("inner_projected").substitute({"U11": ("X1",), "V22": ("X2",), "U10": (), "V11": (), "V20": ()})
    j = extend_with_channel(uniform_bits("X1", "X2"), parallel_channel)
    ev = evaluate(spec, j)
    assert not ev.negative_rows
    square_check(envelope_from_halfplanes(ev.system))


def test_marton_constant_auxiliaries(parallel_channel):
    p = JointPmf(["W", "V1", "V2", "X1", "X2"], np.full((1, 1, 1, 2, 2), 0.25))
    env = region_envelope(SPECS["marton"], extend_with_channel(p, parallel_channel))
    assert env.r1_max == 0.0 and env.r2_top == 0.0


def test_outer_with_constant_u(parallel_channel, uniform_bits):
    p = with_constant(uniform_bits("X1", "X2"), "U")
    ev = evaluate(SPECS["outer"], extend_with_channel(p, parallel_channel))
    env = envelope_from_halfplanes(ev.system)
    square_check(env)
    assert (1.0, 1.0) in {tuple(v) for v in env.vertices()}


def test_missing_auxiliary(parallel_channel, uniform_bits):
    with pytest.raises(MissingAuxiliary):
        evaluate(SPECS["outer"], extend_with_channel(uniform_bits("X1", "X2"), parallel_channel))


def test_unknown_spec():
    with pytest.raises(KeyError):
        get_spec("nope")


def test_split_spec_projects(parallel_channel, uniform_bits):
    al = {"U11": ("X1",), "V22": ("X2",), "U10": (), "V11": (), "V20": ()}
    j = extend_with_channel(uniform_bits("X1", "X2"), parallel_channel)
    for name in ("inner_simultaneous", "inner_sequential"):
        poly = rate_polygon(get_spec(name).substitute(al), j)
        assert poly.vars == ("R1", "R2")
        square_check(envelope_from_halfplanes(poly), tol=1e-9)


def test_binning_rows_are_unsigned():
    rows = {r.label: r for r in SPECS["inner_simultaneous"].rows}
    for lab in ("bin_20", "bin_11", "bin_22", "cross_bin"):
        assert rows[lab].signed is False
    assert all(r.signed for r in SPECS["inner_projected"].rows)
