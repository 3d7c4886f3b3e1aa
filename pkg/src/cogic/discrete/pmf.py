"""Finite joint distributions, channels and information measures (bits)."""

from __future__ import annotations

import json

import numpy as np

from ..errors import AlphabetMismatch, NotDeterministic, UnknownVariable

SUM_TOL = 1e-12
ZERO_PROB = 1e-15


def _names(x):
    if x is None:
        return ()
    if isinstance(x, str):
        return tuple(x.split())
    return tuple(x)


class JointPmf:
    """Joint probability table over named finite variables.

    Parameters
    ----------
    var_names : sequence of str
    table : array_like
        Either an array of shape ``sizes`` or a flat row-major vector
        (then ``sizes`` is required).
    sizes : sequence of int, optional
    """

    def __init__(self, var_names, table, sizes=None):
        names = tuple(var_names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        t = np.array(table, dtype=float)
        if sizes is not None:
            t = t.reshape(tuple(int(s) for s in sizes))
        if t.ndim != len(names):
            raise ValueError(f"table has {t.ndim} axes for {len(names)} variables")
        if np.any(t < 0) or not np.all(np.isfinite(t)):
            raise ValueError("probabilities must be finite and >= 0")
        if abs(t.sum() - 1.0) > 1e-9:
            raise ValueError(f"probabilities sum to {t.sum()!r}, not 1")
        t = t / t.sum()
        t.flags.writeable = False
        self.var_names = names
        self.table = t
        self._axis = {v: i for i, v in enumerate(names)}
        self._hcache = {}

    @property
    def sizes(self):
        return self.table.shape

    def __repr__(self):
        dims = ", ".join(f"{v}:{s}" for v, s in zip(self.var_names, self.sizes))
        return f"JointPmf({dims})"

    def __contains__(self, name):
        return name in self._axis

    def axes(self, names):
        out = []
        for n in _names(names):
            if n not in self._axis:
                raise UnknownVariable(f"variable {n!r} not in {self.var_names}")
            out.append(self._axis[n])
        return out

    def marginal(self, names):
        """Marginal table over ``names`` in the given order."""
        ax = self.axes(names)
        drop = tuple(i for i in range(self.table.ndim) if i not in ax)
        m = self.table.sum(axis=drop)
        kept = sorted(ax)
        return np.moveaxis(m, list(range(len(kept))), [ax.index(k) for k in kept]) if ax else m

    def entropy(self, names) -> float:
        """Joint entropy H(names); the empty set has entropy 0."""
        key = frozenset(self.axes(names))
        if key in self._hcache:
            return self._hcache[key]
        if not key:
            h = 0.0
        else:
            drop = tuple(i for i in range(self.table.ndim) if i not in key)
            p = self.table.sum(axis=drop).ravel()
            p = p[p > ZERO_PROB]
            h = float(-np.sum(p * np.log2(p)))
        self._hcache[key] = h
        return h

    def conditional_entropy(self, a, cond=()) -> float:
        a, cond = set(_names(a)), set(_names(cond))
        return self.entropy(a | cond) - self.entropy(cond)

    def mutual_information(self, a, b, cond=()) -> float:
        return mutual_information(self, a, b, cond)

    def rename(self, mapping):
        return JointPmf([mapping.get(v, v) for v in self.var_names], self.table)

    def to_dict(self):
        return {"vars": list(self.var_names), "sizes": list(self.sizes), "table": self.table.ravel().tolist()}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        d = json.loads(text) if isinstance(text, str) else text
        return cls(d["vars"], d["table"], d["sizes"])


def mutual_information(p: JointPmf, a, b, cond=()) -> float:
    """I(A;B|C) in bits via joint entropies.

    Overlapping sets are allowed and follow the entropy identity
    H(AC) + H(BC) - H(ABC) - H(C).
    """
    a, b, cond = set(_names(a)), set(_names(b)), set(_names(cond))
    p.axes(a | b | cond)
    return p.entropy(a | cond) + p.entropy(b | cond) - p.entropy(a | b | cond) - p.entropy(cond)


class DiscreteChannel:
    """Memoryless channel p(y1, y2 | x1, x2), table shape (|X1|, |X2|, |Y1|, |Y2|)."""

    def __init__(self, table):
        t = np.array(table, dtype=float)
        if t.ndim != 4:
            raise ValueError("channel table must have shape (|X1|, |X2|, |Y1|, |Y2|)")
        if np.any(t < 0) or not np.all(np.isfinite(t)):
            raise ValueError("channel probabilities must be finite and >= 0")
        rows = t.sum(axis=(2, 3))
        if np.any(np.abs(rows - 1.0) > 1e-9):
            raise ValueError("each (x1, x2) row must sum to 1")
        t = t / rows[:, :, None, None]
        t.flags.writeable = False
        self.table = t

    @property
    def input_sizes(self):
        return self.table.shape[:2]

    @property
    def output_sizes(self):
        return self.table.shape[2:]

    def __repr__(self):
        return f"DiscreteChannel(inputs={self.input_sizes}, outputs={self.output_sizes})"

    @classmethod
    def from_functions(cls, nx1, nx2, ny1, ny2, f1, f2):
        """Deterministic channel y1 = f1(x1, x2), y2 = f2(x1, x2)."""
        t = np.zeros((nx1, nx2, ny1, ny2))
        for x1 in range(nx1):
            for x2 in range(nx2):
                t[x1, x2, f1(x1, x2), f2(x1, x2)] = 1.0
        return cls(t)

    @classmethod
    def from_marginals(cls, w1, w2):
        """Product channel p(y1|x1,x2) p(y2|x1,x2)."""
        w1, w2 = np.asarray(w1, float), np.asarray(w2, float)
        return cls(w1[:, :, :, None] * w2[:, :, None, :])

    def y2_marginal(self):
        return self.table.sum(axis=2)

    def y1_marginal(self):
        return self.table.sum(axis=3)

    def y2_is_deterministic(self, tol=1e-12) -> bool:
        return bool(np.all(np.abs(self.y2_marginal().max(axis=2) - 1.0) <= tol))

    def y2_function(self):
        """Lookup table h[x1, x2] when y2 is a deterministic function of the inputs."""
        if not self.y2_is_deterministic():
            raise NotDeterministic("y2 is not a deterministic function of (x1, x2)")
        return self.y2_marginal().argmax(axis=2)

    def to_dict(self):
        return {"vars": ["X1", "X2", "Y1", "Y2"], "sizes": list(self.table.shape), "table": self.table.ravel().tolist()}

    def to_json(self):
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text):
        d = json.loads(text) if isinstance(text, str) else text
        if list(d.get("vars", ["X1", "X2", "Y1", "Y2"])) != ["X1", "X2", "Y1", "Y2"]:
            raise ValueError("channel vars must be X1, X2, Y1, Y2 in that order")
        return cls(np.asarray(d["table"], float).reshape(d["sizes"]))


def extend_with_channel(p: JointPmf, ch: DiscreteChannel, x1="X1", x2="X2", y1="Y1", y2="Y2") -> JointPmf:
    """Joint law of p's variables and the channel outputs."""
    ax = p.axes([x1, x2])
    if (p.sizes[ax[0]], p.sizes[ax[1]]) != ch.input_sizes:
        raise AlphabetMismatch(f"inputs have sizes {(p.sizes[ax[0]], p.sizes[ax[1]])}, channel expects {ch.input_sizes}")
    if y1 in p or y2 in p:
        raise ValueError("distribution already contains channel outputs")
    n = p.table.ndim
    letters = "abcdefghijklmnopqrstuvwxyz"
    src = letters[:n]
    w = src[ax[0]] + src[ax[1]] + "YZ"
    t = np.einsum(f"{src},{w}->{src}YZ", p.table, ch.table)
    return JointPmf(p.var_names + (y1, y2), t)


def random_conditional(rng, shape_parents, n_child):
    """Conditional table p(child | parents), rows uniform on the simplex."""
    return rng.dirichlet(np.ones(n_child), size=tuple(shape_parents)) if shape_parents else rng.dirichlet(np.ones(n_child))


def pmf_from_factors(names, sizes, factors, conditionals):
    """Assemble a joint table from conditional factors.

    Parameters
    ----------
    names, sizes : sequences
        Variables of the joint, in order.
    factors : list of (child, parents)
        Factorization order; each child appears once.
    conditionals : list of arrays
        Array k has shape ``sizes(parents_k) + (size(child_k),)``.
    """
    names = tuple(names)
    size = dict(zip(names, sizes))
    letters = {v: chr(ord("a") + i) for i, v in enumerate(names)}
    table = np.ones(())
    cur = ""
    for (child, parents), cond in zip(factors, conditionals):
        sub = "".join(letters[v] for v in parents) + letters[child]
        out = "".join(sorted(set(cur) | set(sub), key=lambda ch: ord(ch)))
        table = np.einsum(f"{cur},{sub}->{out}", table, cond)
        cur = out
    # reorder to `names`
    order = "".join(letters[v] for v in names)
    table = np.einsum(f"{cur}->{order}", table)
    return JointPmf(names, table.reshape([size[v] for v in names]))


def random_pmf(rng, factors, sizes):
    """Random joint law with the given factorization; each conditional uniform on the simplex.

    Parameters
    ----------
    factors : list of (child, parents)
    sizes : dict name -> alphabet size
    """
    names = [f[0] for f in factors]
    conds = [random_conditional(rng, [sizes[p] for p in parents], sizes[child]) for child, parents in factors]
    return pmf_from_factors(names, [sizes[v] for v in names], factors, conds)
