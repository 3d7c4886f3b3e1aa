"""Two-dimensional rate regions and linear inequality systems.

A rate region is stored as an :class:`Envelope`: the largest R2 reachable
at each R1 on an ascending grid, with linear interpolation in between.
Every region here is closed under lowering either rate, so the envelope
fully describes it.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field

import numpy as np

from .errors import InfeasibleSystem, UnboundedRegion

DEFAULT_GRID = 512


@dataclass(frozen=True)
class RatePair:
    r1: float
    r2: float

    def __post_init__(self):
        for v in (self.r1, self.r2):
            if not np.isfinite(v) or v < 0:
                raise ValueError(f"rate pair coordinates must be finite and >= 0, got {self}")

    def __iter__(self):
        yield self.r1
        yield self.r2


class Envelope:
    """Downward-closed region {(r1, r2): r1 <= r1_max, r2 <= interp(r1)}.

    Parameters
    ----------
    r1_grid : array_like
        Strictly ascending sample points starting at 0.
    r2_max : array_like
        Largest R2 at each sample.
    canonical : bool
        If true (the default) ``r2_max`` is replaced by its running maximum
        from the right, i.e. the downward closure in both axes.
    """

    __slots__ = ("r1_grid", "r2_max")

    def __init__(self, r1_grid, r2_max, canonical=True):
        x = np.array(r1_grid, dtype=float).ravel()
        y = np.array(r2_max, dtype=float).ravel()
        if x.shape != y.shape or x.size == 0:
            raise ValueError("r1_grid and r2_max must be nonempty and of equal length")
        if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
            raise ValueError("envelope samples must be finite")
        if x[0] != 0.0:
            raise ValueError("r1_grid must start at 0")
        if np.any(np.diff(x) <= 0):
            raise ValueError("r1_grid must be strictly ascending")
        y = np.maximum(y, 0.0)
        if canonical:
            y = np.maximum.accumulate(y[::-1])[::-1]
        x.flags.writeable = False
        y.flags.writeable = False
        self.r1_grid = x
        self.r2_max = y

    @property
    def r1_max(self) -> float:
        return float(self.r1_grid[-1])

    @property
    def r2_top(self) -> float:
        return float(self.r2_max.max())

    def __len__(self):
        return self.r1_grid.size

    def __repr__(self):
        return f"Envelope(n={len(self)}, r1_max={self.r1_max:.6g}, r2(0)={self.r2_max[0]:.6g})"

    def __eq__(self, other):
        if not isinstance(other, Envelope):
            return NotImplemented
        return np.array_equal(self.r1_grid, other.r1_grid) and np.array_equal(self.r2_max, other.r2_max)

    __hash__ = None

    def value_at(self, r1):
        """Interpolated height; ``-inf`` beyond ``r1_max``."""
        r1 = np.asarray(r1, dtype=float)
        v = np.interp(r1, self.r1_grid, self.r2_max)
        return np.where(r1 > self.r1_max, -np.inf, v)

    def contains(self, point, tol=0.0) -> bool:
        r1, r2 = point
        if r1 > self.r1_max + tol:
            return False
        return bool(r2 <= float(np.interp(min(r1, self.r1_max), self.r1_grid, self.r2_max)) + tol)

    def is_canonical(self) -> bool:
        return bool(np.all(np.diff(self.r2_max) <= 0))

    def vertices(self):
        """Boundary polyline from (0, r2(0)) to (r1_max, 0), axis caps included."""
        pts = [(0.0, 0.0)] if self.r2_max[0] > 0 else []
        pts += list(zip(self.r1_grid.tolist(), self.r2_max.tolist()))
        if self.r2_max[-1] > 0:
            pts.append((self.r1_max, 0.0))
        return pts

    # -- construction helpers ---------------------------------------------

    @classmethod
    def point(cls, r1=0.0, r2=0.0):
        """Downward closure of a single rate pair."""
        if r1 <= 0:
            return cls([0.0], [r2])
        return cls([0.0, r1], [r2, r2])

    @classmethod
    def from_rectangles(cls, caps_r1, caps_r2, extra_grid=None, grid=DEFAULT_GRID):
        """Union of boxes [0, a_i] x [0, b_i], exact up to the step points.

        The height at r1 is max{b_i : a_i >= r1}. Each box corner is kept
        together with the float just after it, so the staircase is exact.
        """
        a = np.asarray(caps_r1, dtype=float).ravel()
        b = np.asarray(caps_r2, dtype=float).ravel()
        keep = (a >= 0) & (b >= 0)
        a, b = a[keep], b[keep]
        if a.size == 0:
            return cls.point()
        order = np.argsort(a)
        a, b = a[order], b[order]
        # suffix max of heights over boxes with cap >= r1
        suffix = np.maximum.accumulate(b[::-1])[::-1]
        r1_hi = a[-1]
        pts = [np.linspace(0.0, r1_hi, grid), a, np.nextafter(a, np.inf)]
        if extra_grid is not None:
            pts.append(np.asarray(extra_grid, dtype=float))
        x = np.unique(np.concatenate(pts))
        x = x[(x >= 0) & (x <= r1_hi)]
        idx = np.searchsorted(a, x, side="left")
        y = suffix[np.minimum(idx, a.size - 1)]
        return cls(x, y)

    # -- serialization ----------------------------------------------------

    def to_csv(self, fh=None) -> str:
        buf = io.StringIO()
        buf.write("r1,r2\n")
        for x, y in zip(self.r1_grid, self.r2_max):
            buf.write(f"{float(x)!r},{float(y)!r}\n")  # shortest exact round trip
        text = buf.getvalue()
        if fh is not None:
            fh.write(text)
        return text

    @classmethod
    def from_csv(cls, text):
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or [h.strip() for h in rows[0]] != ["r1", "r2"]:
            raise ValueError("envelope CSV must start with header 'r1,r2'")
        data = np.array([[float(v) for v in r] for r in rows[1:] if r], dtype=float)
        return cls(data[:, 0], data[:, 1])


def _merged_grid(*envs):
    return np.unique(np.concatenate([e.r1_grid for e in envs]))


def union(a: Envelope, b: Envelope) -> Envelope:
    """Pointwise maximum on the merged grid.

    The float just past the shorter region's ``r1_max`` is added so the
    vertical drop there is kept rather than smeared by interpolation.
    """
    lo = min(a.r1_max, b.r1_max)
    hi = max(a.r1_max, b.r1_max)
    x = _merged_grid(a, b)
    if lo < hi:
        step = np.nextafter(lo, np.inf)
        if step < hi:
            x = np.union1d(x, [step])
    y = np.maximum(a.value_at(x), b.value_at(x))
    return Envelope(x, y)


def union_all(envs) -> Envelope:
    envs = list(envs)
    if not envs:
        return Envelope.point()
    out = envs[0]
    for e in envs[1:]:
        out = union(out, e)
    return out


def intersection(a: Envelope, b: Envelope) -> Envelope:
    hi = min(a.r1_max, b.r1_max)
    x = _merged_grid(a, b)
    x = np.union1d(x[x <= hi], [hi])
    y = np.minimum(a.value_at(x), b.value_at(x))
    return Envelope(x, y)


def _upper_hull(x, y):
    """Indices of the upper convex hull of points sorted by x (monotone chain)."""
    hull = []
    for i in range(x.size):
        while len(hull) >= 2:
            i0, i1 = hull[-2], hull[-1]
            cross = (x[i1] - x[i0]) * (y[i] - y[i0]) - (y[i1] - y[i0]) * (x[i] - x[i0])
            if cross >= 0:
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def convex_hull(a: Envelope) -> Envelope:
    """Least concave majorant of the envelope over [0, r1_max]."""
    x, y = a.r1_grid, a.r2_max
    h = _upper_hull(x, y)
    y_hull = np.interp(x, x[h], y[h])
    return Envelope(x, np.maximum(y_hull, y))


@dataclass(frozen=True)
class SubsetResult:
    holds: bool
    max_violation: float

    def __bool__(self):
        return self.holds


def subset(a: Envelope, b: Envelope, tol: float = 5e-3) -> SubsetResult:
    """Whether region ``a`` lies inside region ``b`` up to ``tol`` bits.

    Heights are compared on the merged grid. Where ``a`` extends past
    ``b.r1_max`` its height is compared with ``b``'s last sample, and the
    horizontal overshoot is reported separately; the violation is the larger
    of the two.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    x = _merged_grid(a, b)
    x = x[x <= a.r1_max]
    hb = np.interp(np.minimum(x, b.r1_max), b.r1_grid, b.r2_max)
    ha = np.interp(x, a.r1_grid, a.r2_max)
    viol = float(np.max(ha - hb))
    viol = max(viol, a.r1_max - b.r1_max)
    return SubsetResult(viol <= tol, viol)


def max_deviation(a: Envelope, b: Envelope) -> float:
    """Symmetric sup-distance between two envelopes.

    Heights are compared over the common domain; the difference of the
    ``r1_max`` values counts as a deviation too.
    """
    hi = min(a.r1_max, b.r1_max)
    x = _merged_grid(a, b)
    x = x[x <= hi]
    d = np.abs(np.interp(x, a.r1_grid, a.r2_max) - np.interp(x, b.r1_grid, b.r2_max))
    return float(max(d.max(initial=0.0), abs(a.r1_max - b.r1_max)))


# ---------------------------------------------------------------------------
# inequality systems


@dataclass(frozen=True)
class HalfPlaneSystem:
    """Rows ``A @ x <= c`` over named variables.

    ``labels`` is an optional per-row tag used in reports; it does not take
    part in equality or arithmetic.
    """

    vars: tuple
    A: np.ndarray
    c: np.ndarray
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        vars_ = tuple(self.vars)
        A = np.array(self.A, dtype=float).reshape(-1, len(vars_))
        c = np.array(self.c, dtype=float).ravel()
        if A.shape[0] != c.size:
            raise ValueError("row count mismatch between coefficients and rhs")
        if len(set(vars_)) != len(vars_):
            raise ValueError("duplicate variable names")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(c))):
            raise ValueError("system entries must be finite")
        labels = tuple(self.labels) if self.labels else ("",) * c.size
        if len(labels) != c.size:
            raise ValueError("one label per row")
        A.flags.writeable = False
        c.flags.writeable = False
        object.__setattr__(self, "vars", vars_)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_rows(cls, vars, rows, labels=()):
        """Build from ``[(coeffs, rhs), ...]``; coeffs is a sequence or a name->coef dict."""
        vars = tuple(vars)
        pos = {v: i for i, v in enumerate(vars)}
        A = np.zeros((len(rows), len(vars)))
        c = np.zeros(len(rows))
        for k, (coef, rhs) in enumerate(rows):
            if isinstance(coef, dict):
                for name, val in coef.items():
                    A[k, pos[name]] += val
            else:
                A[k] = coef
            c[k] = rhs
        return cls(vars, A, c, labels)

    @property
    def n_rows(self):
        return self.c.size

    def rows(self):
        return [(self.A[i].copy(), float(self.c[i])) for i in range(self.n_rows)]

    def index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise KeyError(name) from None

    def is_feasible_point(self, x, tol=1e-9) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all(self.A @ x <= self.c + tol))

    def with_rows(self, A, c, labels=None):
        A = np.vstack([self.A, np.asarray(A, dtype=float).reshape(-1, len(self.vars))])
        c = np.concatenate([self.c, np.asarray(c, dtype=float).ravel()])
        extra = c.size - self.n_rows
        labels = self.labels + tuple(labels if labels is not None else ("",) * extra)
        return HalfPlaneSystem(self.vars, A, c, labels)

    def reorder(self, vars):
        """Same system over ``vars``; listed vars absent from self get zero columns."""
        vars = tuple(vars)
        A = np.zeros((self.n_rows, len(vars)))
        for j, v in enumerate(self.vars):
            if v in vars:
                A[:, vars.index(v)] = self.A[:, j]
            elif np.any(self.A[:, j] != 0):
                raise KeyError(f"variable {v!r} has nonzero coefficients")
        return HalfPlaneSystem(vars, A, self.c, self.labels)

    def to_json(self) -> str:
        rows = [{"coeffs": self.A[i].tolist(), "rhs": float(self.c[i])} for i in range(self.n_rows)]
        for r, lab in zip(rows, self.labels):
            if lab:
                r["label"] = lab
        return json.dumps({"vars": list(self.vars), "rows": rows}, indent=2)

    @classmethod
    def from_json(cls, text):
        data = json.loads(text) if isinstance(text, str) else text
        vars = data["vars"]
        rows, labels = [], []
        for r in data["rows"]:
            coeffs = r["coeffs"]
            if isinstance(coeffs, dict):
                unknown = set(coeffs) - set(vars)
                if unknown:
                    raise ValueError(f"row mentions undeclared variables {sorted(unknown)}")
            elif len(coeffs) != len(vars):
                raise ValueError("coefficient vector length must equal number of vars")
            rows.append((coeffs, float(r["rhs"])))
            labels.append(r.get("label", ""))
        return cls.from_rows(vars, rows, labels)


def _two_dim(sys: HalfPlaneSystem):
    """Return (A, c) over two columns, dropping all-zero extra columns."""
    if len(sys.vars) == 2:
        return np.array(sys.A), np.array(sys.c)
    names = [v for j, v in enumerate(sys.vars) if np.any(sys.A[:, j] != 0)]
    if len(names) > 2:
        raise ValueError(f"system is not two-dimensional: {names}")
    for v in ("R1", "R2"):
        if v not in names and v in sys.vars:
            names.append(v)
    names = names[:2]
    if len(names) < 2:
        raise ValueError("need two rate variables")
    cols = sorted(names, key=sys.vars.index)
    return sys.A[:, [sys.vars.index(v) for v in cols]].copy(), np.array(sys.c)


def polygon_vertices(sys: HalfPlaneSystem, tol=1e-9):
    """Vertices of the polygon {A x <= c, x >= 0} in a 2-D system.

    Raises InfeasibleSystem if the origin is cut off and UnboundedRegion if
    the polygon is unbounded.
    """
    A, c = _two_dim(sys)
    A = np.vstack([A, -np.eye(2)])
    c = np.concatenate([c, np.zeros(2)])
    scale = np.maximum(np.abs(A).max(axis=1), np.abs(c))
    scale[scale == 0] = 1.0
    if np.any(c < -tol * scale):
        bad = int(np.argmin(c / scale))
        raise InfeasibleSystem(f"origin violates row {bad}: rhs {c[bad]:.3g} < 0")
    # unboundedness: a nonnegative direction d with A d <= 0
    dirs = [np.array([1.0, 0.0]), np.array([0.0, 1.0])]
    for a in A:
        d = np.array([-a[1], a[0]])
        for s in (d, -d):
            if np.all(s >= -1e-15) and np.any(s > 0):
                dirs.append(s / np.abs(s).max())
    for d in dirs:
        if np.all(A @ d <= 1e-12):
            raise UnboundedRegion("rate system does not bound the rates")
    verts = [np.zeros(2)]
    m = A.shape[0]
    for i, j in itertools.combinations(range(m), 2):
        M = A[[i, j]]
        det = M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]
        if abs(det) < 1e-14 * max(1.0, np.abs(M).max() ** 2):
            continue
        p = np.linalg.solve(M, c[[i, j]])
        if np.all(A @ p <= c + tol * scale):
            verts.append(np.maximum(p, 0.0))
    V = np.array(verts)
    # order counterclockwise starting from the origin, dropping duplicates
    V = np.unique(np.round(V, 13), axis=0)
    return V


def envelope_from_halfplanes(sys: HalfPlaneSystem, grid: int = DEFAULT_GRID) -> Envelope:
    """Envelope of the 2-D polygon {A x <= c, x >= 0}.

    The sample grid is ``grid`` uniform points plus every vertex abscissa, so
    the polygon boundary is reproduced exactly.
    """
    V = polygon_vertices(sys)
    A, c = _two_dim(sys)
    r1_hi = float(V[:, 0].max())
    x = np.unique(np.concatenate([np.linspace(0.0, r1_hi, max(grid, 2)), V[:, 0]]))
    x = x[(x >= 0) & (x <= r1_hi)]
    up = A[:, 1] > 1e-14
    if np.any(up):
        caps = (c[up, None] - A[up, 0, None] * x[None, :]) / A[up, 1, None]
        y = caps.min(axis=0)
    else:  # r2 fixed at zero by the nonnegativity row
        y = np.zeros_like(x)
    y = np.clip(y, 0.0, None)
    return Envelope(x, y)


def envelope_vertex_oracle(sys: HalfPlaneSystem, r1):
    """Reference height via brute-force vertex enumeration at each r1.

    For every r1 the row ``-R1 <= -r1`` is added and R2 is maximized over
    the vertices of the resulting polygon. Slow, used only in tests.
    """
    A, c = _two_dim(sys)
    A = np.vstack([A, -np.eye(2)])
    c = np.concatenate([c, np.zeros(2)])
    out = []
    for t in np.atleast_1d(r1):
        Ai = np.vstack([A, [-1.0, 0.0]])
        ci = np.concatenate([c, [-t]])
        best = -np.inf
        for i, j in itertools.combinations(range(Ai.shape[0]), 2):
            M = Ai[[i, j]]
            if abs(M[0, 0] * M[1, 1] - M[0, 1] * M[1, 0]) < 1e-12:
                continue
            p = np.linalg.solve(M, ci[[i, j]])
            if np.all(Ai @ p <= ci + 1e-9):
                best = max(best, p[1])
        out.append(best)
    return np.array(out)


def polygon_to_envelope_grid(polys, grid=DEFAULT_GRID) -> Envelope:
    """Union of several 2-D systems as one envelope."""
    return union_all(envelope_from_halfplanes(p, grid) for p in polys)
