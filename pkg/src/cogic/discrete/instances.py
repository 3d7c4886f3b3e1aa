"""Seeded random test instances: distributions and channels with a fixed factorization."""

from __future__ import annotations

import numpy as np

from .pmf import DiscreteChannel, pmf_from_factors

SPLIT_FACTORS = (
    ("U10", ()),
    ("U11", ("U10",)),
    ("X1", ("U10", "U11")),
    ("V20", ("U10", "U11")),
    ("V11", ("V20", "U10", "U11")),
    ("V22", ("V20", "U10", "U11", "V11")),
    ("X2", ("U10", "U11", "V20", "V11", "V22")),
)


def _simplex(rng, n, shape=()):
    return rng.dirichlet(np.ones(n), size=shape) if shape else rng.dirichlet(np.ones(n))


def _mix(rng, weight, coarse, fine):
    """(1 - weight) * coarse + weight * fine, a conditional that leans on fewer parents."""
    return (1.0 - weight) * coarse + weight * fine


def random_channel(rng, nx1=2, nx2=2, ny1=2, ny2=2) -> DiscreteChannel:
    """Channel whose (x1, x2) rows are uniform on the joint output simplex."""
    t = _simplex(rng, ny1 * ny2, (nx1, nx2)).reshape(nx1, nx2, ny1, ny2)
    return DiscreteChannel(t)


def random_deterministic_y2_channel(rng, nx1=2, nx2=2, ny1=2, ny2=None) -> DiscreteChannel:
    """y2 = h(x1, x2) with h injective in x2 for each x1; y1 random given (x1, x2)."""
    ny2 = ny2 or nx1 * nx2
    t = np.zeros((nx1, nx2, ny1, ny2))
    w1 = _simplex(rng, ny1, (nx1, nx2))
    for x1 in range(nx1):
        outs = rng.permutation(ny2)[:nx2]
        for x2 in range(nx2):
            t[x1, x2, :, outs[x2]] = w1[x1, x2]
    return DiscreteChannel(t)


def random_split_instance(rng, coupling_max=0.3, size=2):
    """Distribution over the seven inputs/auxiliaries of the rate-split scheme.

    The conditionals of V20 and V22 are mixtures of a law that ignores U11
    (and V11) and a fully general one; the mixing weight is drawn from
    [0, coupling_max]. Small weights keep the binning penalties small, so
    most instances have nonnegative right-hand sides.
    """
    n = size
    e = rng.uniform(0.0, coupling_max, 2)
    pu10 = _simplex(rng, n)
    pu11 = _simplex(rng, n, (n,))
    px1 = _simplex(rng, n, (n, n))
    pv20 = _mix(rng, e[0], np.repeat(_simplex(rng, n, (n,))[:, None, :], n, axis=1), _simplex(rng, n, (n, n)))
    pv11 = _simplex(rng, n, (n, n, n))
    base = _simplex(rng, n, (n, n))
    pv22 = _mix(rng, e[1], np.broadcast_to(base[:, :, None, None, :], (n,) * 5), _simplex(rng, n, (n,) * 4))
    px2 = _simplex(rng, n, (n,) * 5)
    names = [c for c, _ in SPLIT_FACTORS]
    return pmf_from_factors(names, [n] * 7, SPLIT_FACTORS, [pu10, pu11, px1, pv20, pv11, pv22, px2])


def split_instances(n, seed=0, coupling_max=0.3):
    """``n`` (pmf, channel) pairs; instance k uses the generator seeded by (seed, k)."""
    out = []
    for k in range(n):
        rng = np.random.default_rng([seed, k])
        out.append((random_split_instance(rng, coupling_max), random_channel(rng)))
    return out


def _cond(rng, n, parents, coupling, keep=()):
    """p(child | parents) mixing a law on the ``keep`` parents with a general one.

    ``parents`` lists parent sizes; ``keep`` lists the indices of the
    parents the coarse law depends on. The fine law gets weight drawn from
    [0, coupling].
    """
    shape = tuple(parents)
    coarse_shape = tuple(parents[i] for i in keep)
    coarse = _simplex(rng, n, coarse_shape) if coarse_shape else _simplex(rng, n)
    expand = [slice(None) if i in keep else None for i in range(len(shape))]
    coarse = np.broadcast_to(coarse[tuple(expand) + (slice(None),)], shape + (n,))
    fine = _simplex(rng, n, shape) if shape else _simplex(rng, n)
    return _mix(rng, rng.uniform(0.0, coupling), coarse, fine)


def _semantic_channel(rng, y2_of):
    """Channel with y1 random given (x1, x2) and y2 = y2_of(x1, x2, y1, z), z a fresh binary noise."""
    w = _simplex(rng, 4, (2, 2)).reshape(2, 2, 2, 2)
    ny2 = 4
    t = np.zeros((2, 2, 2, ny2))
    for x1 in range(2):
        for x2 in range(2):
            for y1 in range(2):
                for z in range(2):
                    t[x1, x2, y1, y2_of(x1, x2, y1, z)] += w[x1, x2, y1, z]
    return DiscreteChannel(t)


def reduction_instance(case, rng, coupling=0.3):
    """(base pmf, channel) for one special-case reduction.

    - ``strong``: Y2 = (Y1, X1), so receiver 2 sees everything receiver 1 does.
    - ``weak``: Y2 = (Y1, Z), a degraded pair.
    - ``wu``, ``jiang_xin``, ``marton``: binning auxiliaries lean weakly on
      the interference they are binned against, so most instances have
      nonnegative right-hand sides.
    - ``marton``: transmitter 1 is absent (X1 is constant, |X1| = 1).
    """
    from .pmf import random_pmf
    from .specs import SPECS

    if case == "strong":
        s = SPECS["strong_interference"]
        return random_pmf(rng, s.factors, s.sizes), _semantic_channel(rng, lambda x1, x2, y1, z: 2 * y1 + x1)
    if case == "weak":
        s = SPECS["weak_interference"]
        return random_pmf(rng, s.factors, s.sizes), _semantic_channel(rng, lambda x1, x2, y1, z: 2 * y1 + z)
    if case == "wu":
        names = ["U", "X1", "V", "X2"]
        facs = [("U", ()), ("X1", ("U",)), ("V", ("U", "X1")), ("X2", ("U", "X1", "V"))]
        conds = [_simplex(rng, 2), _simplex(rng, 2, (2,)), _cond(rng, 2, (2, 2), coupling), _simplex(rng, 2, (2, 2, 2))]
        return pmf_from_factors(names, [2] * 4, facs, conds), random_channel(rng)
    if case == "jiang_xin":
        names = ["Q", "W", "X1", "U", "V", "X2"]
        facs = [("Q", ()), ("W", ("Q",)), ("X1", ("Q", "W")), ("U", ("Q", "W")), ("V", ("Q", "W")), ("X2", ("Q", "W", "U", "V"))]
        conds = [_simplex(rng, 2), _simplex(rng, 2, (2,)), _simplex(rng, 2, (2, 2)),
                 _cond(rng, 2, (2, 2), coupling, keep=(0,)), _cond(rng, 2, (2, 2), coupling, keep=(0,)),
                 _simplex(rng, 2, (2, 2, 2, 2))]
        return pmf_from_factors(names, [2] * 6, facs, conds), random_channel(rng)
    if case == "maric":
        s = SPECS["maric"]
        return random_pmf(rng, s.factors, s.sizes), random_channel(rng)
    if case == "marton":
        names = ["W", "V1", "V2", "X2", "X1"]
        facs = [("W", ()), ("V1", ("W",)), ("V2", ("W", "V1")), ("X2", ("W", "V1", "V2")), ("X1", ())]
        conds = [_simplex(rng, 2), _simplex(rng, 2, (2,)), _cond(rng, 2, (2, 2), coupling, keep=(0,)),
                 _simplex(rng, 2, (2, 2, 2)), np.ones(1)]
        return pmf_from_factors(names, [2, 2, 2, 2, 1], facs, conds), random_channel(rng, nx1=1)
    if case == "devroye":
        return random_split_instance(rng, coupling), random_channel(rng)
    raise ValueError(f"unknown reduction {case!r}")


def reduction_instances(case, n, seed=0, coupling=0.3):
    """``n`` instances of ``case``; instance k uses the generator seeded by (seed, k)."""
    return [reduction_instance(case, np.random.default_rng([seed, k]), coupling) for k in range(n)]
