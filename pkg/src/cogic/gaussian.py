"""Gaussian cognitive Z interference channel: closed-form rate regions.

Standard form: unit-variance noises, user-1 power ``P1``, user-2 power ``P2``,
cognitive-link gain ``K`` (transmitter 1 to transmitter 2) and interference
gain ``b`` (transmitter 1 to receiver 2). All rates are in bits.

Every region is returned as an :class:`~cogic.geometry.Envelope`. When a
union over a power split can be inverted in closed form, it is evaluated
exactly at each R1 sample instead of on a parameter grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .errors import (
    NegativeArgument,
    NonpositiveLogArgument,
    ParameterRegime,
    RegimeBoundary,
    StrongInterference,
    WeakInterference,
    ZeroGain,
)
from .geometry import DEFAULT_GRID, Envelope, HalfPlaneSystem, RatePair, envelope_from_halfplanes

K_LIMIT = 1e6
DENOM_TOL = 1e-12


def gamma(x):
    """Gaussian capacity kernel ``0.5 * log2(1 + x)`` in bits."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0):
        raise NegativeArgument(f"gamma needs x >= 0, got {x}")
    out = 0.5 * np.log2(1.0 + arr)
    return float(out) if out.ndim == 0 else out


def _g(x):
    # unchecked kernel; tiny negative round-off clipped
    return 0.5 * np.log2(1.0 + np.maximum(x, 0.0))


@dataclass(frozen=True)
class StandardZic:
    P1: float
    P2: float
    K: float
    b: float

    def __post_init__(self):
        for name in ("P1", "P2", "K", "b"):
            v = getattr(self, name)
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"{name} must be finite and >= 0, got {v}")
        if self.K > K_LIMIT:
            raise ValueError(f"K > {K_LIMIT:g} is not supported; use region_r2 for the K -> inf limit")

    @property
    def C1(self):
        return float(_g(self.P1))

    @property
    def C2(self):
        return float(_g(self.P2))


@dataclass(frozen=True)
class PhysicalZic:
    """Channel with arbitrary gains and noise variances.

    ``h11`` is the direct gain to receiver 1, ``h12`` the gain to the
    cognitive transmitter, ``h13`` the interference gain to receiver 2 and
    ``h23`` the direct gain of user 2. ``N1, N2, N3`` are the matching noise
    variances.
    """

    h11: float
    h12: float
    h13: float
    h23: float
    N1: float = 1.0
    N2: float = 1.0
    N3: float = 1.0
    P1p: float = 1.0
    P2p: float = 1.0


def standardize(p: PhysicalZic) -> StandardZic:
    """Rescale to unit noises without changing the capacity region."""
    for name in ("h11", "h12", "h13", "h23"):
        v = getattr(p, name)
        if v == 0:
            raise ZeroGain(f"{name} = 0")
        if v < 0:
            raise ValueError(f"{name} must be positive")
    for name in ("N1", "N2", "N3"):
        if getattr(p, name) <= 0:
            raise ValueError(f"{name} must be positive")
    if p.P1p < 0 or p.P2p < 0:
        raise ValueError("powers must be >= 0")
    return StandardZic(
        P1=p.h11**2 * p.P1p / p.N1,
        P2=p.h23**2 * p.P2p / p.N3,
        K=(p.h12 / p.h11) * np.sqrt(p.N1 / p.N2),
        b=(p.h13 / p.h11) * np.sqrt(p.N1 / p.N3),
    )


@dataclass(frozen=True)
class SweepGrid:
    """Discretization of the power split (alpha, beta) and the DPC coefficient mu.

    ``r1_samples`` is the number of uniform R1 samples per envelope;
    ``beta_refine`` turns on a local 1-D refinement of the best grid beta.
    """

    alpha_steps: int = 101
    beta_steps: int = 101
    mu_steps: int = 201
    mu_range: float = 5.0
    include_costa_candidate: bool = True
    r1_samples: int = DEFAULT_GRID
    beta_refine: bool = True

    def __post_init__(self):
        if min(self.alpha_steps, self.beta_steps, self.mu_steps, self.r1_samples) < 2:
            raise ValueError("grid counts must be >= 2")
        if self.mu_range <= 0:
            raise ValueError("mu_range must be positive")

    def alpha_beta(self):
        """Triangular (alpha, beta) pairs with beta <= alpha."""
        a = np.linspace(0.0, 1.0, self.alpha_steps)
        bt = np.linspace(0.0, 1.0, self.beta_steps)
        A, B = np.meshgrid(a, bt, indexing="ij")
        mask = B <= A + 1e-15
        return A[mask], np.minimum(B[mask], A[mask])

    def mu(self):
        return np.linspace(-self.mu_range, self.mu_range, self.mu_steps)


DEFAULT_SWEEP = SweepGrid()


def _check_split(alpha, beta):
    if not (0.0 <= beta <= alpha <= 1.0):
        raise ValueError(f"need 0 <= beta <= alpha <= 1, got alpha={alpha}, beta={beta}")


def _r1_grid(r1_max, n, extra=()):
    pts = [np.linspace(0.0, r1_max, n)]
    ex = np.asarray([e for e in extra if 0.0 < e < r1_max], dtype=float)
    pts.append(ex)
    return np.unique(np.concatenate(pts))


def _feature_points(c: StandardZic):
    """R1 abscissae where the regions here have corners."""
    pts = [float(_g(c.b**2 * c.P1 / (1 + c.P2))), c.C1, float(_g(c.K**2 * c.P1))]
    pts.append(float(_g(c.b**2 * c.P1 + c.P2)) - c.C2)
    return pts


# ---------------------------------------------------------------------------
# closed-form regions


def region_r1_system(c: StandardZic) -> HalfPlaneSystem:
    return HalfPlaneSystem.from_rows(
        ["R1", "R2"],
        [([1, 0], c.C1), ([0, 1], c.C2), ([1, 1], _g(c.b**2 * c.P1 + c.P2))],
    )


def region_r1(c: StandardZic, grid: int = DEFAULT_GRID) -> Envelope:
    """Capacity region when the interference is strong (b >= 1)."""
    if c.b < 1:
        raise WeakInterference(f"region_r1 needs b >= 1, got b={c.b}")
    return envelope_from_halfplanes(region_r1_system(c), grid)


def region_r2(c: StandardZic, grid: int = DEFAULT_GRID) -> Envelope:
    """The rectangle [0, C1] x [0, C2]; the K -> infinity limit."""
    sys = HalfPlaneSystem.from_rows(["R1", "R2"], [([1, 0], c.C1), ([0, 1], c.C2)])
    return envelope_from_halfplanes(sys, grid)


def zic_sum_capacity(c: StandardZic) -> float:
    if c.b >= 1:
        raise StrongInterference(f"sum capacity formula needs b < 1, got b={c.b}")
    return c.C1 + float(_g(c.P2 / (1 + c.b**2 * c.P1)))


def corner_point(c: StandardZic) -> RatePair:
    """Corner shared by the strong-interference regions: user 2 at full rate."""
    return RatePair(float(_g(c.b**2 * c.P1 / (1 + c.P2))), c.C2)


def sum_rate_corner_point(c: StandardZic) -> RatePair:
    """Corner with user 1 at full rate and user 2 treating it as noise."""
    return RatePair(c.C1, float(_g(c.P2 / (1 + c.b**2 * c.P1))))


def r1_subset_r3_k_threshold(c: StandardZic) -> float:
    """Smallest K for which the decode-both region lies inside the block-Markov region.

    Obtained by matching the two regions' heights at R1 = C1.
    """
    b2 = c.b**2
    if b2 < 1:
        raise WeakInterference(f"threshold defined for b >= 1, got b={c.b}")
    den = 1 + c.P2 - b2
    if den <= 0:
        raise RegimeBoundary(f"b^2 = {b2:g} >= 1 + P2 = {1 + c.P2:g}: threshold undefined")
    return float(c.b * np.sqrt(((b2 - 1) * c.P1 + c.P2) / den))


# ---------------------------------------------------------------------------
# block-Markov superposition with sequential decoding at receiver 2


def _r3_rows(c: StandardZic, alpha, beta):
    kp = c.K**2 * c.P1
    g_dpc = _g(c.b**2 * beta * c.P1 / (1 + c.b**2 * (1 - beta) * c.P1 + c.P2))
    r1_caps = np.stack(
        np.broadcast_arrays(
            _g(kp * alpha),
            np.full_like(np.asarray(alpha, float), c.C1),
            _g(kp * (alpha - beta)) + g_dpc,
            _g((1 - beta) * c.P1) + g_dpc,
        )
    )
    r2_cap = _g(c.P2 / (1 + c.b**2 * (alpha - beta) * c.P1))
    return r1_caps, r2_cap


def r3_slice_system(c: StandardZic, alpha, beta) -> HalfPlaneSystem:
    """Five-row polygon of the sequential-decoding scheme at one power split."""
    _check_split(alpha, beta)
    caps, r2 = _r3_rows(c, alpha, beta)
    rows = [([1, 0], float(v)) for v in caps] + [([0, 1], float(r2))]
    return HalfPlaneSystem.from_rows(["R1", "R2"], rows)


def zic_rate_system(c: StandardZic, alpha, beta) -> HalfPlaneSystem:
    """Pre-elimination rows over (R1, R11, R12, R0, R2).

    R11 is the part of user 1's message resolved through the cell index,
    R12 the part decoded directly by receiver 2, R0 the cell-index rate.
    """
    _check_split(alpha, beta)
    P1, P2, b = c.P1, c.P2, c.b
    kp = c.K**2 * P1
    names = ["R1", "R11", "R12", "R0", "R2"]
    rows = [
        ({"R11": 1}, _g(kp * (alpha - beta))),
        ({"R12": 1}, _g(kp * beta)),
        ({"R11": 1, "R12": 1}, _g(kp * alpha)),
        ({"R12": 1}, _g(beta * P1 / ((1 - beta) * P1 + 1))),
        ({"R0": 1}, _g((1 - alpha) * P1 / (1 + (alpha - beta) * P1))),
        ({"R11": 1, "R0": -1}, _g((alpha - beta) * P1)),
        ({"R11": 1}, _g((1 - beta) * P1)),
        ({"R12": 1}, _g(b**2 * beta * P1 / (1 + b**2 * (1 - beta) * P1 + P2))),
        ({"R2": 1}, _g(P2 / (1 + b**2 * (alpha - beta) * P1))),
        ({"R1": 1, "R11": -1, "R12": -1}, 0.0),
        ({"R1": -1, "R11": 1, "R12": 1}, 0.0),
    ]
    rows += [({v: -1}, 0.0) for v in names]
    labels = [f"zic_{i}" for i in range(1, 10)] + ["couple+", "couple-"] + [f"nonneg_{v}" for v in names]
    return HalfPlaneSystem.from_rows(names, [(a, float(r)) for a, r in rows], labels)


def _r3_height(c: StandardZic, r1, beta):
    """Best R2 of the sequential scheme at rate R1 and split beta (alpha optimized).

    For fixed beta the smallest feasible alpha has a closed form; R2 decreases
    in alpha - beta, so that alpha is optimal. Returns -inf where infeasible.
    """
    r1, beta = np.broadcast_arrays(np.asarray(r1, float), np.asarray(beta, float))
    P1, P2, b = c.P1, c.P2, c.b
    kp = c.K**2 * P1
    g_dpc = _g(b**2 * beta * P1 / (1 + b**2 * (1 - beta) * P1 + P2))
    slack = 1e-12
    ok = (r1 <= c.C1 + slack) & (r1 <= _g((1 - beta) * P1) + g_dpc + slack)
    if kp > 0:
        d1 = (np.exp2(2 * r1) - 1) / kp - beta
        d2 = (np.exp2(2 * np.maximum(r1 - g_dpc, 0.0)) - 1) / kp
        d = np.maximum(np.maximum(d1, d2), 0.0)
    else:
        d = np.zeros_like(r1)
        ok &= r1 <= slack
    ok &= beta + d <= 1 + 1e-12
    r2 = _g(P2 / (1 + b**2 * d * P1))
    return np.where(ok, r2, -np.inf)


def _r3_r1_max(c: StandardZic, betas):
    kp = c.K**2 * c.P1

    def cap(beta):
        g_dpc = _g(c.b**2 * beta * c.P1 / (1 + c.b**2 * (1 - beta) * c.P1 + c.P2))
        return np.minimum.reduce(
            [np.full_like(beta, min(c.C1, float(_g(kp)))), _g(kp * (1 - beta)) + g_dpc, _g((1 - beta) * c.P1) + g_dpc]
        )

    vals = cap(betas)
    k = int(np.argmax(vals))
    best = float(vals[k])
    lo, hi = betas[max(k - 1, 0)], betas[min(k + 1, betas.size - 1)]
    if hi > lo:
        res = minimize_scalar(lambda t: -float(cap(np.array([t]))[0]), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-12})
        best = max(best, -float(res.fun))
    return best


def _neg_finite(v):
    v = float(v)
    return -v if np.isfinite(v) else 1e9


def _refined_max(fun, r1, betas, vals, refine):
    """Per-r1 maximum over beta, polished by a bounded 1-D search around the best grid beta."""
    k = np.argmax(vals, axis=1)
    best = vals[np.arange(r1.size), k]
    arg = betas[k]
    if not refine:
        return best, arg
    for i in np.flatnonzero(np.isfinite(best)):
        lo = betas[max(k[i] - 1, 0)]
        hi = betas[min(k[i] + 1, betas.size - 1)]
        if hi <= lo:
            continue
        res = minimize_scalar(lambda t: _neg_finite(fun(r1[i], t)), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-10})
        if np.isfinite(res.fun) and -res.fun > best[i]:
            best[i], arg[i] = -res.fun, res.x
    return best, arg


def _region_r3_samples(c: StandardZic, g: SweepGrid):
    betas = np.linspace(0.0, 1.0, max(g.beta_steps, 2))
    r1_max = _r3_r1_max(c, betas)
    x = _r1_grid(r1_max, g.r1_samples, _feature_points(c))
    vals = _r3_height(c, x[:, None], betas[None, :])
    best, arg = _refined_max(lambda r, t: _r3_height(c, r, t), x, betas, vals, g.beta_refine)
    # r1 = r1_max can miss feasibility by round-off; fall back to the last feasible sample
    finite = np.isfinite(best)
    if not finite.all():
        last = np.flatnonzero(finite).max()
        x, best, arg = x[: last + 1], best[: last + 1], arg[: last + 1]
    return x, best, arg


def region_r3(c: StandardZic, g: SweepGrid = DEFAULT_SWEEP) -> Envelope:
    """Union over power splits of the sequential-decoding polygons.

    alpha is optimized in closed form for each (R1, beta); beta is searched
    on the grid and then refined locally.
    """
    x, best, _ = _region_r3_samples(c, g)
    return Envelope(x, best)


# ---------------------------------------------------------------------------
# simultaneous decoding with dirty-paper coding at receiver 2


def costa_mu(c: StandardZic, alpha, beta):
    """DPC coefficient that makes the binning loss vanish against the cell index."""
    return c.b * c.P2 / (c.P2 + 1 + c.b**2 * (alpha - beta) * c.P1)


def _zeta_arrays(c: StandardZic, alpha, beta, mu):
    P1, P2, b = c.P1, c.P2, c.b
    ab, bb = 1 - alpha, 1 - beta
    s11 = P2 + mu**2 * ab * P1
    cross = (P2 + mu * b * ab * P1) ** 2
    den = s11 * (P2 + b**2 * bb * P1 + 1) - cross
    n1 = s11 * (P2 + b**2 * P1 + 1) - cross
    n2 = P2 * (P2 + b**2 * bb * P1 + 1)
    n3 = P2 * (P2 + b**2 * P1 + 1)
    valid = (den > DENOM_TOL) & (n1 > 0) & (n2 > 0)
    with np.errstate(divide="ignore", invalid="ignore"):
        safe = np.where(valid, den, 1.0)
        z1 = 0.5 * np.log2(np.where(valid, n1, 1.0) / safe)
        z2 = 0.5 * np.log2(np.where(valid, n2, 1.0) / safe)
        z3 = 0.5 * np.log2(np.where(valid, n3, 1.0) / safe)
    return z1, z2, z3, valid


def zeta(c: StandardZic, alpha, beta, mu):
    """Receiver-2 rate terms (zeta1, zeta2, zeta3) for Gaussian DPC with coefficient mu."""
    _check_split(alpha, beta)
    z1, z2, z3, valid = _zeta_arrays(c, float(alpha), float(beta), float(mu))
    if not bool(valid):
        raise NonpositiveLogArgument(
            f"covariance determinant not positive at alpha={alpha}, beta={beta}, mu={mu}"
        )
    return float(z1), float(z2), float(z3)


def _r4_caps(c: StandardZic, alpha, beta, mu):
    """(R1 cap, R2 cap, sum cap, valid) of the eight-row polygon."""
    kp = c.K**2 * c.P1
    z1, z2, z3, valid = _zeta_arrays(c, alpha, beta, mu)
    gk = _g(kp * (alpha - beta))
    gb = _g((1 - beta) * c.P1)
    a = np.minimum.reduce([_g(kp * alpha), np.full_like(gk, c.C1), gk + _g(beta * c.P1), gk + z1, gb + z1])
    s = np.minimum(gk, gb) + z3
    valid = valid & (a >= 0) & (z2 >= 0) & (s >= 0)
    return a, z2, s, valid


def r4_slice_system(c: StandardZic, alpha, beta, mu) -> HalfPlaneSystem:
    """Eight-row polygon of the simultaneous-decoding scheme."""
    z1, z2, z3 = zeta(c, alpha, beta, mu)
    kp = c.K**2 * c.P1
    gk = float(_g(kp * (alpha - beta)))
    gb = float(_g((1 - beta) * c.P1))
    rows = [
        ([1, 0], float(_g(kp * alpha))),
        ([1, 0], c.C1),
        ([1, 0], gk + float(_g(beta * c.P1))),
        ([1, 0], gk + z1),
        ([1, 0], gb + z1),
        ([0, 1], z2),
        ([1, 1], gk + z3),
        ([1, 1], gb + z3),
    ]
    return HalfPlaneSystem.from_rows(["R1", "R2"], rows)


def _slices_height(a, r2cap, s, x, chunk=4096):
    """max over polygons {R1 <= a, R2 <= r2cap, R1 + R2 <= s} of the height at each x."""
    out = np.full(x.size, -np.inf)
    order = np.argsort(-a)
    a, r2cap, s = a[order], r2cap[order], s[order]
    for i in range(0, a.size, chunk):
        aa, cc, ss = a[i:i + chunk, None], r2cap[i:i + chunk, None], s[i:i + chunk, None]
        h = np.where(aa >= x[None, :], np.minimum(cc, ss - x[None, :]), -np.inf)
        np.maximum(out, h.max(axis=0), out=out)
    return out


def region_r4(c: StandardZic, g: SweepGrid = DEFAULT_SWEEP) -> Envelope:
    """Union over (alpha, beta, mu) of the simultaneous-decoding polygons.

    The grid slices are augmented with the DPC-optimal mu at every grid
    split and, when ``g.include_costa_candidate`` is set, with the split
    that is optimal for the sequential scheme at each R1 sample. At that mu
    each polygon contains its sequential counterpart, so the result always
    contains :func:`region_r3` computed on the same grid.
    """
    al, be = g.alpha_beta()
    mus = g.mu()
    A = np.repeat(al, mus.size)
    B = np.repeat(be, mus.size)
    M = np.tile(mus, al.size)
    x3, _, beta3 = _region_r3_samples(c, g)
    if g.include_costa_candidate:
        # optimal alpha for the sequential scheme at each (R1, beta)
        kp = c.K**2 * c.P1
        if kp > 0:
            g_dpc = _g(c.b**2 * beta3 * c.P1 / (1 + c.b**2 * (1 - beta3) * c.P1 + c.P2))
            d = np.maximum.reduce([(np.exp2(2 * x3) - 1) / kp - beta3,
                                   (np.exp2(2 * np.maximum(x3 - g_dpc, 0.0)) - 1) / kp,
                                   np.zeros_like(x3)])
        else:
            d = np.zeros_like(x3)
        alpha3 = np.minimum(beta3 + d, 1.0)
        extra_a = np.concatenate([al, alpha3])
        extra_b = np.concatenate([be, np.minimum(beta3, alpha3)])
        A = np.concatenate([A, extra_a])
        B = np.concatenate([B, extra_b])
        M = np.concatenate([M, costa_mu(c, extra_a, extra_b)])
    a, r2cap, s, valid = _r4_caps(c, A, B, M)
    a, r2cap, s = a[valid], r2cap[valid], s[valid]
    if a.size == 0:
        return Envelope.point()
    r1_max = float(a.max())
    x = np.union1d(_r1_grid(r1_max, g.r1_samples, _feature_points(c)), x3[x3 <= r1_max])
    h = _slices_height(a, r2cap, s, x)
    keep = np.isfinite(h)
    return Envelope(x[keep], h[keep])


# ---------------------------------------------------------------------------
# Han-Kobayashi region without time sharing (classic ZIC, weak interference)


def _hk_r1(c, alpha):
    b2 = c.b**2
    return _g(alpha * c.P1) + _g(b2 * (1 - alpha) * c.P1 / (1 + b2 * alpha * c.P1 + c.P2))


def _hk_alpha_for_r1(c, r1):
    """Inverse of the HK R1 cap, which is increasing in alpha when b^2 < 1 + P2."""
    t = np.exp2(2 * np.asarray(r1, float))
    b2 = c.b**2
    base = 1 + b2 * c.P1 + c.P2
    num = t * (1 + c.P2) - base
    den = c.P1 * (base - t * b2)
    with np.errstate(divide="ignore", invalid="ignore"):
        alpha = np.where(den > 0, num / den, 1.0)
    return np.clip(alpha, 0.0, 1.0)


def hk_slice_system(c: StandardZic, alpha) -> HalfPlaneSystem:
    return HalfPlaneSystem.from_rows(
        ["R1", "R2"],
        [([1, 0], float(_hk_r1(c, alpha))), ([0, 1], float(_g(c.P2 / (1 + c.b**2 * alpha * c.P1))))],
    )


def region_r5(c: StandardZic, g: SweepGrid = DEFAULT_SWEEP) -> Envelope:
    """Han-Kobayashi region with Gaussian inputs, union over the private power share.

    The R1 cap increases and the R2 cap decreases in the private share,
    so the union is traced exactly by inverting the R1 cap.
    """
    if c.b > 1:
        raise StrongInterference(f"region_r5 needs b <= 1, got b={c.b}")
    r1_lo = float(_hk_r1(c, 0.0))
    r1_hi = float(_hk_r1(c, 1.0))
    x = _r1_grid(r1_hi, g.r1_samples, [r1_lo] + _feature_points(c))
    alpha = np.where(x <= r1_lo, 0.0, _hk_alpha_for_r1(c, x))
    y = _g(c.P2 / (1 + c.b**2 * alpha * c.P1))
    return Envelope(x, y)


# ---------------------------------------------------------------------------
# outer bound for b <= 1, K >= 1


def _outer_r2(c, alpha):
    ab = 1 - alpha
    num = c.b**2 * ab * c.P1 + c.P2 + 2 * c.b * np.sqrt(np.maximum(ab * c.P1 * c.P2, 0.0))
    return _g(num / (1 + c.b**2 * alpha * c.P1))


def outer_slice_system(c: StandardZic, alpha) -> HalfPlaneSystem:
    rows = [([1, 0], c.C1), ([0, 1], c.C2), ([1, 0], float(_g(c.K**2 * alpha * c.P1))),
            ([0, 1], float(_outer_r2(c, alpha)))]
    return HalfPlaneSystem.from_rows(["R1", "R2"], rows)


def _check_outer(c):
    if c.b > 1 or c.K < 1:
        raise ParameterRegime(f"outer bound needs b <= 1 and K >= 1, got b={c.b}, K={c.K}")


def outer_bound_gaussian(c: StandardZic, g: SweepGrid = DEFAULT_SWEEP) -> Envelope:
    """Union over alpha of the four-row boxes.

    The R1 cap grows and the R2 cap shrinks with alpha, so at each R1 the
    smallest admissible alpha is optimal and is available in closed form.
    """
    _check_outer(c)
    kp = c.K**2 * c.P1
    r1_hi = min(c.C1, float(_g(kp)))
    x = _r1_grid(r1_hi, g.r1_samples, _feature_points(c))
    alpha = np.clip((np.exp2(2 * x) - 1) / kp, 0.0, 1.0) if kp > 0 else np.zeros_like(x)
    y = np.minimum(c.C2, _outer_r2(c, alpha))
    return Envelope(x, y)


def outer_tradeoff_curve(c: StandardZic, n: int = 201):
    """Parametric points (R1(alpha), R2(alpha)) of the outer bound's box corners."""
    _check_outer(c)
    alpha = np.linspace(0.0, 1.0, n)
    r1 = np.minimum(c.C1, _g(c.K**2 * alpha * c.P1))
    r2 = np.minimum(c.C2, _outer_r2(c, alpha))
    return np.column_stack([alpha, r1, r2])


REGIONS = {
    "r1": lambda c, g: region_r1(c, g.r1_samples),
    "r2": lambda c, g: region_r2(c, g.r1_samples),
    "r3": region_r3,
    "r4": region_r4,
    "r5": region_r5,
    "outer": outer_bound_gaussian,
}


def region(name: str, c: StandardZic, g: SweepGrid = DEFAULT_SWEEP) -> Envelope:
    try:
        fn = REGIONS[name]
    except KeyError:
        raise ValueError(f"unknown region {name!r}; choose from {sorted(REGIONS)}") from None
    return fn(c, g)
