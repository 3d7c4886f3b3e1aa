"""Distribution-space search for weighted-rate optima and region frontiers.

A region spec is evaluated on p(inputs) p(y1, y2 | x1, x2), where p(inputs)
is built from one conditional table per factor of the spec's
factorization. Two search modes are available:

- ``random``: restarts with conditionals drawn uniformly from the simplex,
  each refined by coordinate ascent with step halving.
- ``grid``: exhaustive enumeration of conditionals quantized to multiples
  of ``1 / grid_levels``.

Restart ``r`` draws from ``numpy.random.default_rng([seed, r])``, so a run
with more restarts extends the seed stream of a run with fewer.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .fm import project
from .geometry import Envelope, HalfPlaneSystem, RatePair, envelope_from_halfplanes, union_all
from .discrete.pmf import DiscreteChannel, JointPmf, pmf_from_factors
from .discrete.specs import RegionSpec

ZERO_PROB = 1e-15
DEFAULT_WEIGHTS = ((1.0, 0.0), (3.0, 1.0), (1.0, 1.0), (1.0, 3.0), (0.0, 1.0))


@dataclass(frozen=True)
class SearchConfig:
    """Budget and mode of a distribution search.

    Parameters
    ----------
    restarts : int
        Random restarts (``mode="random"``).
    grid_levels : int
        Quantization of each conditional probability (``mode="grid"``).
    weight_sweep : tuple of (w1, w2)
        Directions traced by :func:`frontier`.
    seed : int
    mode : {"random", "grid"}
    min_step : float
        Coordinate ascent stops once the step falls below this.
    max_sweeps : int
        Cap on passes over all coordinates at one step size.
    sizes : dict, optional
        Alphabet sizes overriding the spec defaults (for example the
        cardinality of an auxiliary).
    max_grid_points : int
        Refuse exhaustive runs larger than this.
    """

    restarts: int = 500
    grid_levels: int = 4
    weight_sweep: tuple = DEFAULT_WEIGHTS
    seed: int = 0
    mode: str = "random"
    min_step: float = 1e-4
    max_sweeps: int = 50
    sizes: dict = field(default_factory=dict)
    max_grid_points: int = 200_000

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.grid_levels < 1:
            raise ValueError("grid_levels must be >= 1")
        if self.mode not in ("random", "grid"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if not 0 < self.min_step <= 0.5:
            raise ValueError("min_step must lie in (0, 0.5]")
        sweep = tuple(tuple(float(x) for x in w) for w in self.weight_sweep)
        for w in sweep:
            _check_weights(w)
        object.__setattr__(self, "weight_sweep", sweep)

    def replace(self, **kw):
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d.update(kw)
        return SearchConfig(**d)

    def to_json(self):
        d = {k: getattr(self, k) for k in self.__dataclass_fields__}
        d["weight_sweep"] = [list(w) for w in self.weight_sweep]
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text) if isinstance(text, str) else dict(text)
        if "weight_sweep" in d:
            d["weight_sweep"] = tuple(tuple(w) for w in d["weight_sweep"])
        return cls(**d)


def _check_weights(w):
    if len(w) != 2 or w[0] < 0 or w[1] < 0 or (w[0] == 0 and w[1] == 0):
        raise ValueError(f"weights must be two nonnegative numbers, not both zero: {w!r}")


class SearchResult(NamedTuple):
    value: float
    pmf: JointPmf | None
    point: RatePair | None


# ---------------------------------------------------------------------------
# compiled evaluation


class _Problem:
    """A spec on a channel, compiled to entropy combinations over fixed axes."""

    def __init__(self, spec: RegionSpec, ch: DiscreteChannel, sizes=None, admissible=None):
        if not spec.factors:
            raise ValueError(f"spec {spec.ident!r} has no factorization to search over")
        sz = dict(spec.sizes)
        sz.update(sizes or {})
        sz["X1"], sz["X2"] = ch.input_sizes
        self.spec = spec
        self.ch = ch
        self.admissible = admissible
        self.factors = tuple(spec.factors)
        if "X1" not in [c for c, _ in self.factors]:
            # broadcast specs: transmitter 1 is absent
            if sz["X1"] != 1:
                raise ValueError(f"spec {spec.ident!r} has no X1; the channel must have |X1| = 1")
            self.factors += (("X1", ()),)
        self.names = [c for c, _ in self.factors]
        self.sizes = [int(sz[v]) for v in self.names]
        self.size = dict(zip(self.names, self.sizes))
        allv = self.names + ["Y1", "Y2"]
        missing = spec.variables() - set(allv)
        if missing:
            raise ValueError(f"spec {spec.ident!r} uses {sorted(missing)} outside its factorization")
        self.all_names = tuple(allv)
        self.axis = {v: i for i, v in enumerate(allv)}
        self.ndim = len(allv)
        letters = "abcdefghijklmnopqrstuvwxyz"
        sub = {v: letters[i] for i, v in enumerate(allv)}
        ops = ["".join(sub[p] for p in parents) + sub[c] for c, parents in self.factors]
        ops.append(sub["X1"] + sub["X2"] + sub["Y1"] + sub["Y2"])
        self._einsum = ",".join(ops) + "->" + "".join(sub[v] for v in allv)
        self.shapes = [tuple(self.size[p] for p in parents) + (self.size[c],) for c, parents in self.factors]

        # each row: lhs vector and a list of (coef, axis set) entropy terms
        self.rate_vars = tuple(spec.rate_vars)
        self.row_lhs = []
        self.row_terms = []
        self.row_signed = []
        sets = {}
        for r in spec.rows:
            a = np.zeros(len(self.rate_vars))
            for k, v in r.lhs.items():
                a[self.rate_vars.index(k)] += v
            terms = []
            for t in r.rhs.terms:
                if t.b is None:
                    combo = [(1, t.a | t.c), (-1, t.c)]
                else:
                    combo = [(1, t.a | t.c), (1, t.b | t.c), (-1, t.a | t.b | t.c), (-1, t.c)]
                for s, vs in combo:
                    key = frozenset(self.axis[v] for v in vs)
                    sets.setdefault(key, len(sets))
                    terms.append((t.coef * s, sets[key]))
            self.row_lhs.append(a)
            self.row_terms.append(terms)
            self.row_signed.append(r.signed)
        self._sets = [None] * len(sets)
        for key, i in sets.items():
            self._sets[i] = tuple(ax for ax in range(self.ndim) if ax not in key)
        extra = []
        for lhs, rhs in spec.equalities:
            a = np.zeros(len(self.rate_vars))
            for k, v in lhs.items():
                a[self.rate_vars.index(k)] += v
            for k, v in rhs.items():
                a[self.rate_vars.index(k)] -= v
            extra += [(a, 0.0), (-a, 0.0)]
        for i in range(len(self.rate_vars)):
            e = np.zeros(len(self.rate_vars))
            e[i] = -1.0
            extra.append((e, 0.0))
        self._extra_A = np.array([a for a, _ in extra]).reshape(-1, len(self.rate_vars))
        self._extra_c = np.array([c for _, c in extra])
        self._A = np.vstack([np.array(self.row_lhs).reshape(-1, len(self.rate_vars)), self._extra_A])

    def joint_table(self, conds):
        return np.einsum(self._einsum, *conds, self.ch.table)

    def rhs(self, conds):
        """Right-hand sides, and whether the distribution is excluded.

        A distribution is excluded when a signed row is negative or the
        ``admissible`` predicate rejects it.
        """
        t = self.joint_table(conds)
        h = np.empty(len(self._sets))
        for i, drop in enumerate(self._sets):
            p = t.sum(axis=drop).ravel() if drop else t.ravel()
            p = p[p > ZERO_PROB]
            h[i] = -np.dot(p, np.log2(p))
        vals = np.array([sum(c * h[k] for c, k in terms) for terms in self.row_terms])
        neg = any(s and v < -1e-12 for s, v in zip(self.row_signed, vals))
        if not neg and self.admissible is not None:
            neg = not self.admissible(JointPmf(self.all_names, t))
        return vals, neg

    def system(self, conds):
        vals, neg = self.rhs(conds)
        c = np.concatenate([vals, self._extra_c])
        return HalfPlaneSystem(self.rate_vars, self._A, c), neg

    def polygon(self, conds):
        """2-D (R1, R2) system, or None when a signed row is negative."""
        sys, neg = self.system(conds)
        if neg:
            return None
        if self.rate_vars != ("R1", "R2"):
            sys = project(sys, ["R1", "R2"]).output
        return sys

    def pmf(self, conds):
        return pmf_from_factors(self.names, self.sizes, self.factors, conds)


def support(sys: HalfPlaneSystem | None, w):
    """max w1*R1 + w2*R2 over a 2-D system and a maximizing vertex.

    Returns (-inf, None) for an empty or missing polygon.
    """
    if sys is None:
        return -np.inf, None
    A, c = np.asarray(sys.A), np.asarray(sys.c)
    m = A.shape[0]
    if m < 2:
        return -np.inf, None
    i, j = np.triu_indices(m, 1)
    det = A[i, 0] * A[j, 1] - A[i, 1] * A[j, 0]
    ok = np.abs(det) > 1e-12
    i, j, det = i[ok], j[ok], det[ok]
    x = (c[i] * A[j, 1] - A[i, 1] * c[j]) / det
    y = (A[i, 0] * c[j] - c[i] * A[j, 0]) / det
    pts = np.stack([x, y], axis=1)
    feas = np.all(pts @ A.T <= c + 1e-9 * (1 + np.abs(c)), axis=1)
    pts = pts[feas]
    if not len(pts):
        return -np.inf, None
    vals = pts @ np.asarray(w, float)
    k = int(np.argmax(vals))
    return float(vals[k]), pts[k]


# ---------------------------------------------------------------------------
# search


def _uniform_conds(prob):
    return [np.full(s, 1.0 / s[-1]) for s in prob.shapes]


def _random_conds(prob, rng):
    out = []
    for s in prob.shapes:
        out.append(rng.dirichlet(np.ones(s[-1]), size=s[:-1]) if len(s) > 1 else rng.dirichlet(np.ones(s[-1])))
    return out


def _moves(prob):
    """(factor, parent index, to, from) coordinate moves."""
    out = []
    for k, s in enumerate(prob.shapes):
        n = s[-1]
        for idx in np.ndindex(*s[:-1]):
            for a in range(n):
                for b in range(n):
                    if a != b:
                        out.append((k, idx, a, b))
    return out


def _ascend(prob, conds, w, cfg, value):
    """Coordinate ascent moving probability mass between two letters of one row."""
    moves = _moves(prob)
    step = 0.25
    while step >= cfg.min_step:
        for _ in range(cfg.max_sweeps):
            improved = False
            for k, idx, a, b in moves:
                row = conds[k][idx]
                delta = min(step, row[b])
                if delta <= 0:
                    continue
                trial = conds[k].copy()
                trial[idx + (a,)] += delta
                trial[idx + (b,)] -= delta
                cand = conds[:k] + [trial] + conds[k + 1:]
                v, _ = support(prob.polygon(cand), w)
                if v > value + 1e-13:
                    conds, value, improved = cand, v, True
            if not improved:
                break
        step /= 2
    return conds, value


def _quantized_rows(n, levels):
    pts = [c for c in itertools.product(range(levels + 1), repeat=n) if sum(c) == levels]
    return [np.array(c, float) / levels for c in pts]


def _grid_points(prob, cfg):
    per_row = []
    slots = []
    for k, s in enumerate(prob.shapes):
        q = _quantized_rows(s[-1], cfg.grid_levels)
        for idx in np.ndindex(*s[:-1]):
            per_row.append(q)
            slots.append((k, idx))
    total = int(np.prod([len(q) for q in per_row], dtype=float))
    if total > cfg.max_grid_points:
        raise ValueError(f"exhaustive grid has {total} points, above max_grid_points={cfg.max_grid_points}")
    for choice in itertools.product(*per_row):
        conds = [np.empty(s) for s in prob.shapes]
        for (k, idx), row in zip(slots, choice):
            conds[k][idx] = row
        yield conds


def _candidates(prob, w, cfg):
    """Local optima, one per restart, or the single grid optimum."""
    if cfg.mode == "grid":
        best = (-np.inf, None)
        for conds in _grid_points(prob, cfg):
            v, _ = support(prob.polygon(conds), w)
            if v > best[0]:
                best = (v, conds)
        return [best] if best[1] is not None else []
    out = []
    for r in range(cfg.restarts):
        rng = np.random.default_rng([cfg.seed, r])
        conds = _uniform_conds(prob) if r == 0 else _random_conds(prob, rng)
        v, _ = support(prob.polygon(conds), w)
        conds, v = _ascend(prob, conds, w, cfg, v)
        out.append((v, conds))
    return out


def maximize_weighted_rate(spec: RegionSpec, ch: DiscreteChannel, w, cfg: SearchConfig | None = None,
                           admissible=None) -> SearchResult:
    """Best w1*R1 + w2*R2 over distributions with the spec's factorization.

    Restart 0 starts from uniform conditionals; later restarts start from
    simplex-uniform draws. The first-found optimum is kept on ties.
    ``admissible``, if given, is a predicate on the joint law (inputs and
    outputs); rejected distributions count as empty regions.

    Returns
    -------
    SearchResult
        ``(value, pmf, point)``; ``value`` is ``-inf`` and the others are
        None when every visited distribution gave an empty region.
    """
    cfg = cfg or SearchConfig()
    _check_weights(tuple(w))
    prob = _Problem(spec, ch, cfg.sizes, admissible)
    best = (-np.inf, None)
    for v, conds in _candidates(prob, w, cfg):
        if v > best[0]:
            best = (v, conds)
    if best[1] is None:
        return SearchResult(-np.inf, None, None)
    _, pt = support(prob.polygon(best[1]), w)
    point = RatePair(max(0.0, float(pt[0])), max(0.0, float(pt[1])))
    return SearchResult(float(best[0]), prob.pmf(best[1]), point)


def frontier(spec: RegionSpec, ch: DiscreteChannel, cfg: SearchConfig | None = None, grid: int = 256,
             admissible=None) -> Envelope:
    """Downward-closed union of the polygons found along the weight sweep.

    Every restart's local optimum contributes its polygon, so adding
    restarts (same seed) never shrinks the result.
    """
    cfg = cfg or SearchConfig()
    prob = _Problem(spec, ch, cfg.sizes, admissible)
    envs = []
    for w in cfg.weight_sweep:
        for v, conds in _candidates(prob, w, cfg):
            if np.isfinite(v):
                envs.append(envelope_from_halfplanes(prob.polygon(conds), grid=grid))
    if not envs:
        return Envelope.point(0.0, 0.0)
    return union_all(envs)
