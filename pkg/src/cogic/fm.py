"""Fourier-Motzkin projection of linear inequality systems.

Floating-point elimination normalizes each row by its largest coefficient
and zeroes entries below ``ZERO_TOL``. Redundant rows are removed after
every elimination step with one small LP per row. Pass ``exact=True`` to
:func:`project` for a rational-arithmetic path, used as a test oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.optimize import linprog

from .geometry import HalfPlaneSystem

ZERO_TOL = 1e-12
REDUNDANCY_TOL = 1e-10


@dataclass(frozen=True)
class ProjectionReport:
    input: HalfPlaneSystem
    kept_vars: tuple
    output: HalfPlaneSystem
    rows_generated: int
    rows_after_redundancy_removal: int
    order: tuple = ()

    def to_dict(self):
        import json

        return {
            "kept_vars": list(self.kept_vars),
            "order": list(self.order),
            "rows_generated": self.rows_generated,
            "rows_after_redundancy_removal": self.rows_after_redundancy_removal,
            "output": json.loads(self.output.to_json()),
        }


def _normalize(A, c):
    scale = np.abs(A).max(axis=1) if A.shape[1] else np.zeros(A.shape[0])
    zero_rows = scale <= ZERO_TOL
    scale = np.where(zero_rows, 1.0, scale)
    A = A / scale[:, None]
    c = c / scale
    A[np.abs(A) < ZERO_TOL] = 0.0
    A[zero_rows] = 0.0
    return A, c


def _drop_trivial(A, c):
    """Drop 0 <= c rows; collapse the system to 0 <= -1 if some row reads 0 <= negative."""
    zero = ~np.any(A != 0, axis=1)
    if np.any(zero & (c < -ZERO_TOL * 10)):
        return np.zeros((1, A.shape[1])), np.array([-1.0])
    return A[~zero], c[~zero]


def _is_empty_marker(A, c):
    return A.shape[0] == 1 and not np.any(A) and c[0] < 0


def _dedupe(A, c):
    """Keep the tightest of each group of parallel rows (exact after normalization)."""
    if A.shape[0] == 0:
        return A, c
    key = np.round(A, 12)
    order = np.lexsort((c,) + tuple(key.T[::-1]))
    A, c, key = A[order], c[order], key[order]
    first = np.ones(A.shape[0], dtype=bool)
    first[1:] = np.any(key[1:] != key[:-1], axis=1)
    return A[first], c[first]


def fm_eliminate(sys: HalfPlaneSystem, var: str) -> HalfPlaneSystem:
    """Eliminate one variable by pairwise combination of its bounds.

    Rows without ``var`` pass through. If ``var`` is bounded on one side
    only, every row mentioning it is dropped.
    """
    j = sys.index(var)
    A, c = _normalize(np.array(sys.A), np.array(sys.c))
    col = A[:, j]
    pos, neg = col > ZERO_TOL, col < -ZERO_TOL
    zer = ~(pos | neg)
    Ap, cp = A[pos] / col[pos, None], c[pos] / col[pos]
    An, cn = A[neg] / -col[neg, None], c[neg] / -col[neg]
    new_A = (Ap[:, None, :] + An[None, :, :]).reshape(-1, A.shape[1])
    new_c = (cp[:, None] + cn[None, :]).ravel()
    A2 = np.vstack([A[zer], new_A])
    c2 = np.concatenate([c[zer], new_c])
    A2 = np.delete(A2, j, axis=1)
    A2, c2 = _normalize(A2, c2)
    A2, c2 = _drop_trivial(A2, c2)
    return HalfPlaneSystem(tuple(v for v in sys.vars if v != var), A2, c2)


def _lp_redundant(A, c, i, keep):
    """True if row i is implied by rows in ``keep`` (excluding i)."""
    others = keep.copy()
    others[i] = False
    A_ub = np.vstack([A[others], A[i]])
    b_ub = np.concatenate([c[others], [c[i] + 1.0]])
    res = linprog(-A[i], A_ub=A_ub, b_ub=b_ub, bounds=[(None, None)] * A.shape[1], method="highs")
    if res.status == 2:
        return None  # infeasible
    if res.status != 0:
        return False
    return -res.fun <= c[i] + REDUNDANCY_TOL * max(1.0, abs(c[i]))


def remove_redundant(sys: HalfPlaneSystem, method: str = "lp") -> HalfPlaneSystem:
    """Drop rows implied by the others.

    ``method="lp"`` certifies each removal by maximizing the row over the
    remaining rows; ``method="pairwise"`` only removes duplicates and
    parallel rows with a looser right-hand side.
    """
    A, c = _normalize(np.array(sys.A), np.array(sys.c))
    A, c = _drop_trivial(A, c)
    if _is_empty_marker(A, c):
        return HalfPlaneSystem(sys.vars, A, c)
    A, c = _dedupe(A, c)
    if method == "lp" and A.shape[0] > 1:
        keep = np.ones(A.shape[0], dtype=bool)
        # loosest rows first: they are the likeliest to be implied
        for i in np.argsort(-c, kind="stable"):
            red = _lp_redundant(A, c, i, keep)
            if red is None:
                z = np.zeros((1, A.shape[1]))
                return HalfPlaneSystem(sys.vars, z, [-1.0])
            if red:
                keep[i] = False
        A, c = A[keep], c[keep]
    elif method not in ("lp", "pairwise"):
        raise ValueError(f"unknown method {method!r}")
    order = np.lexsort((c,) + tuple(np.round(A, 12).T[::-1]))
    return HalfPlaneSystem(sys.vars, A[order], c[order])


def _pick_variable(A, cols):
    best, best_cost = None, None
    for j in cols:
        p = int(np.sum(A[:, j] > ZERO_TOL))
        n = int(np.sum(A[:, j] < -ZERO_TOL))
        cost = p * n - p - n
        if best_cost is None or cost < best_cost:
            best, best_cost = j, cost
    return best


def project(sys: HalfPlaneSystem, keep, order=None, exact=False, method="lp") -> ProjectionReport:
    """Project onto the variables in ``keep``.

    Parameters
    ----------
    sys : HalfPlaneSystem
    keep : iterable of str
        Variables to keep; the output lists them in ``sys`` order.
    order : sequence of str, optional
        Elimination order. By default the variable with the fewest
        generated rows is eliminated next.
    exact : bool
        Use rational arithmetic; redundancy is then pruned with exact
        parallel-row dominance and Imbert's history test instead of LPs.
    """
    keep = tuple(keep)
    missing = set(keep) - set(sys.vars)
    if missing:
        raise KeyError(f"keep names unknown variables: {sorted(missing)}")
    elim = [v for v in sys.vars if v not in keep]
    if order is not None:
        order = list(order)
        if sorted(order) != sorted(elim):
            raise ValueError("order must list exactly the eliminated variables")
    if exact:
        return _project_exact(sys, keep, order or elim)

    cur = remove_redundant(sys, method=method)
    generated = 0
    done = []
    while len(cur.vars) > len(keep):
        if order is not None:
            var = order[len(done)]
        else:
            cols = [cur.vars.index(v) for v in cur.vars if v not in keep]
            var = cur.vars[_pick_variable(cur.A, cols)]
        cur = fm_eliminate(cur, var)
        generated += cur.n_rows
        cur = remove_redundant(cur, method=method)
        done.append(var)
    out = cur.reorder([v for v in sys.vars if v in keep])
    return ProjectionReport(sys, keep, out, generated, out.n_rows, tuple(done))


def _project_exact(sys, keep, order):
    def frac_row(a, rhs):
        return tuple(Fraction(float(x)) for x in a), Fraction(float(rhs))

    rows = [(*frac_row(sys.A[i], sys.c[i]), frozenset([i])) for i in range(sys.n_rows)]
    vars_ = list(sys.vars)
    generated = 0
    empty = False
    for step, var in enumerate(order, start=1):
        j = vars_.index(var)
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        out = [r for r in rows if r[0][j] == 0]
        for a, ca, ha in pos:
            for b, cb, hb in neg:
                hist = ha | hb
                if len(hist) > step + 1:  # Imbert: implied by the rest
                    continue
                sa, sb = a[j], -b[j]
                coef = tuple(x / sa + y / sb for x, y in zip(a, b))
                out.append((coef, ca / sa + cb / sb, hist))
        generated += len(out)
        rows = []
        best = {}
        for a, rhs, h in out:
            a = a[:j] + a[j + 1 :]
            m = max((abs(x) for x in a), default=Fraction(0))
            if m == 0:
                if rhs < 0:
                    empty = True
                continue
            a = tuple(x / m for x in a)
            rhs = rhs / m
            if a not in best or rhs < best[a][0]:
                best[a] = (rhs, h)
        rows = [(a, rhs, h) for a, (rhs, h) in best.items()]
        del vars_[j]
    if empty:
        out_sys = HalfPlaneSystem(tuple(vars_), np.zeros((1, len(vars_))), [-1.0])
    else:
        A = np.array([[float(x) for x in a] for a, _, _ in rows]).reshape(-1, len(vars_))
        c = np.array([float(r) for _, r, _ in rows])
        out_sys = HalfPlaneSystem(tuple(vars_), A, c)
    out_sys = out_sys.reorder([v for v in sys.vars if v in keep])
    return ProjectionReport(sys, keep, out_sys, generated, out_sys.n_rows, tuple(order))


def equality_rows(vars, lhs: dict, rhs: dict):
    """Two rows encoding sum(lhs) == sum(rhs) over ``vars``."""
    a = np.zeros(len(vars))
    for k, v in lhs.items():
        a[vars.index(k)] += v
    for k, v in rhs.items():
        a[vars.index(k)] -= v
    return [(a, 0.0), (-a, 0.0)]


def lift_point(sys: HalfPlaneSystem, kept: dict, tol=1e-9):
    """Find values for the non-kept variables making ``sys`` feasible, or None.

    Solves a feasibility LP with the kept variables fixed.
    """
    free = [v for v in sys.vars if v not in kept]
    fixed = np.array([kept.get(v, 0.0) for v in sys.vars])
    cols = [sys.vars.index(v) for v in free]
    rhs = sys.c - sys.A @ fixed + tol
    if not free:
        return {} if np.all(rhs >= 0) else None
    res = linprog(np.zeros(len(free)), A_ub=sys.A[:, cols], b_ub=rhs,
                  bounds=[(None, None)] * len(free), method="highs")
    if res.status != 0:
        return None
    return dict(zip(free, res.x))
