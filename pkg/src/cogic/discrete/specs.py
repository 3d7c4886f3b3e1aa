"""Symbolic inequality systems over information measures.

A :class:`RegionSpec` is a list of rows ``sum_k a_k * rate_k <= expr`` where
``expr`` is a signed sum of mutual informations and entropies. Evaluating a
spec on a joint distribution gives a numeric
:class:`~cogic.geometry.HalfPlaneSystem`.

Auxiliary substitutions (for example "set V11 to a constant and V22 to
X2") are applied with :meth:`RegionSpec.substitute`: every variable maps to
a tuple of base variables, and the empty tuple means a constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import MissingAuxiliary
from ..fm import project
from ..geometry import HalfPlaneSystem
from .pmf import DiscreteChannel, JointPmf, _names, extend_with_channel


@dataclass(frozen=True)
class Term:
    """``coef * I(a; b | c)``, or ``coef * H(a | c)`` when ``b`` is None."""

    coef: float
    a: frozenset
    b: frozenset | None
    c: frozenset

    def value(self, p: JointPmf) -> float:
        if self.b is None:
            return self.coef * (p.entropy(self.a | self.c) - p.entropy(self.c))
        return self.coef * (
            p.entropy(self.a | self.c) + p.entropy(self.b | self.c) - p.entropy(self.a | self.b | self.c) - p.entropy(self.c)
        )

    def variables(self):
        return self.a | (self.b or frozenset()) | self.c

    def substitute(self, aliases):
        def sub(s):
            out = set()
            for v in s:
                out.update(aliases.get(v, (v,)))
            return frozenset(out)

        return Term(self.coef, sub(self.a), None if self.b is None else sub(self.b), sub(self.c))

    def __str__(self):
        j = lambda s: "".join(sorted(s)) or "0"
        body = f"H({j(self.a)}" if self.b is None else f"I({j(self.a)};{j(self.b)}"
        body += f"|{j(self.c)})" if self.c else ")"
        return body


class Expr:
    """Signed sum of information terms."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        self.terms = tuple(terms)

    def __add__(self, other):
        return Expr(self.terms + other.terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Expr(Term(-t.coef, t.a, t.b, t.c) for t in self.terms)

    def __rmul__(self, k):
        return Expr(Term(k * t.coef, t.a, t.b, t.c) for t in self.terms)

    def value(self, p: JointPmf) -> float:
        return float(sum(t.value(p) for t in self.terms))

    def variables(self):
        out = set()
        for t in self.terms:
            out |= t.variables()
        return out

    def substitute(self, aliases):
        return Expr(t.substitute(aliases) for t in self.terms)

    def __str__(self):
        parts = []
        for t in self.terms:
            sign = "-" if t.coef < 0 else "+"
            k = "" if abs(abs(t.coef) - 1) < 1e-15 else f"{abs(t.coef):g}"
            parts.append(f"{sign} {k}{t}")
        s = " ".join(parts) or "0"
        return s[2:] if s.startswith("+ ") else s


def I(a, b, c=()):  # noqa: E743 - standard notation
    return Expr([Term(1.0, frozenset(_names(a)), frozenset(_names(b)), frozenset(_names(c)))])


def H(a, c=()):
    return Expr([Term(1.0, frozenset(_names(a)), None, frozenset(_names(c)))])


ZERO = Expr()


@dataclass(frozen=True)
class Row:
    """``sum(lhs[v] * v) <= rhs``.

    ``signed`` rows must have a nonnegative right-hand side for the
    distribution to contribute; binning rows (whose bound is a negative
    penalty on a bin index rate) set it to False.
    """

    lhs: dict
    rhs: Expr
    label: str = ""
    signed: bool = True

    def substitute(self, aliases):
        return Row(self.lhs, self.rhs.substitute(aliases), self.label, self.signed)


@dataclass(frozen=True)
class RegionSpec:
    """A registered rate-region inequality system.

    Parameters
    ----------
    ident : str
    rate_vars : tuple of str
        All rate variables; ``R1`` and ``R2`` are the ones projected onto.
    rows : tuple of Row
    equalities : tuple of (dict, dict)
        Linear couplings such as R1 = R11 + R10.
    factors : tuple of (child, parents)
        Factorization of the input-side distribution, used to draw random
        or searched distributions. Channel outputs are not listed.
    sizes : dict
        Default alphabet sizes of the input-side variables.
    """

    ident: str
    rate_vars: tuple
    rows: tuple
    equalities: tuple = ()
    factors: tuple = ()
    sizes: dict = field(default_factory=dict)
    description: str = ""

    def variables(self):
        out = set()
        for r in self.rows:
            out |= r.rhs.variables()
        return out

    def substitute(self, aliases, ident=None, factors=None, sizes=None):
        """Spec with each variable replaced by its alias tuple (empty tuple = constant)."""
        aliases = {k: tuple(_names(v)) for k, v in aliases.items()}
        return RegionSpec(
            ident or self.ident + "*",
            self.rate_vars,
            tuple(r.substitute(aliases) for r in self.rows),
            self.equalities,
            factors if factors is not None else (),
            sizes if sizes is not None else {},
            self.description,
        )

    def rhs_values(self, p: JointPmf):
        return [r.rhs.value(p) for r in self.rows]


def _as_joint(p: JointPmf, ch: DiscreteChannel | None):
    if ch is None or ("Y1" in p and "Y2" in p):
        return p
    return extend_with_channel(p, ch)


@dataclass(frozen=True)
class EvaluatedRegion:
    spec: RegionSpec
    system: HalfPlaneSystem
    rhs: tuple
    negative_rows: tuple

    @property
    def has_negative_rhs(self):
        return bool(self.negative_rows)


def evaluate(spec: RegionSpec, p: JointPmf, ch: DiscreteChannel | None = None, tol=1e-12) -> EvaluatedRegion:
    """Numeric system plus the labels of rows whose information sum is negative."""
    joint = _as_joint(p, ch)
    missing = spec.variables() - set(joint.var_names)
    if missing:
        raise MissingAuxiliary(f"{spec.ident} needs variables {sorted(missing)} not in {joint.var_names}")
    names = list(spec.rate_vars)
    rows, labels, rhs = [], [], []
    negative = []
    for k, r in enumerate(spec.rows):
        v = r.rhs.value(joint)
        rhs.append(v)
        if r.signed and v < -tol:
            negative.append(r.label or f"row{k + 1}")
        rows.append((r.lhs, v))
        labels.append(r.label or f"row{k + 1}")
    for lhs, rhs_ in spec.equalities:
        a = dict(lhs)
        for kk, vv in rhs_.items():
            a[kk] = a.get(kk, 0.0) - vv
        rows += [(a, 0.0), ({kk: -vv for kk, vv in a.items()}, 0.0)]
        labels += ["eq+", "eq-"]
    for v in names:
        rows.append(({v: -1.0}, 0.0))
        labels.append(f"nonneg_{v}")
    sys = HalfPlaneSystem.from_rows(names, rows, labels)
    return EvaluatedRegion(spec, sys, tuple(rhs), tuple(negative))


def eval_region(spec: RegionSpec, p: JointPmf, ch: DiscreteChannel | None = None) -> HalfPlaneSystem:
    """Numeric inequality system of ``spec`` on ``p`` extended by ``ch``."""
    return evaluate(spec, p, ch).system


def rate_polygon(spec: RegionSpec, p: JointPmf, ch: DiscreteChannel | None = None, exact=False) -> HalfPlaneSystem:
    """The (R1, R2) polygon: the evaluated system projected when it has split rates."""
    sys = eval_region(spec, p, ch)
    if tuple(sys.vars) == ("R1", "R2"):
        return sys
    return project(sys, ["R1", "R2"], exact=exact).output


# ---------------------------------------------------------------------------
# registered regions

_EQ_SPLIT = (({"R1": 1}, {"R11": 1, "R10": 1}), ({"R2": 1}, {"R22": 1, "R20": 1}))
_SPLIT_VARS = ("R1", "R2", "R11", "R10", "R22", "R20", "L11", "L20", "L22")
_AUX7 = ("U10", "U11", "V11", "V20", "V22", "X1", "X2")
# generic joint law written as a chain; every factor sees all predecessors
_CHAIN7 = tuple((v, _AUX7[:i]) for i, v in enumerate(_AUX7))


def _split_common_rows():
    return [
        Row({"R20": 1, "L20": -1}, -I("V20", "U11", "U10"), "bin_20", False),
        Row({"R11": 1, "L11": -1}, -I("V11", "U11", "V20 U10"), "bin_11", False),
        Row({"R22": 1, "L22": -1}, -I("V22", "U11", "V20 U10"), "bin_22", False),
        Row({"R11": 1, "R22": 1, "L11": -1, "L22": -1},
            -I("V11", "V22", "V20 U10") - I("U11", "V11 V22", "V20 U10"), "cross_bin", False),
    ]


def _build_specs():
    specs = {}
    cross = I("V11", "V22", "V20 U10") + I("U11", "V22", "V11 V20 U10")
    specs["inner_projected"] = RegionSpec(
        "inner_projected",
        ("R1", "R2"),
        (
            Row({"R1": 1}, I("V11 U11 V20 U10", "Y1"), "r1"),
            Row({"R2": 1}, I("V22 V20", "Y2", "U10") - I("V22 V20", "U11", "U10"), "r2"),
            Row({"R1": 1, "R2": 1}, I("V11 U11", "Y1", "V20 U10") + I("V22 V20 U10", "Y2") - cross, "sum_a"),
            Row({"R1": 1, "R2": 1}, I("V11 U11 V20 U10", "Y1") + I("V22", "Y2", "V20 U10") - cross, "sum_b"),
            Row({"R1": 1, "R2": 2},
                I("V11 U11 V20", "Y1", "U10") + I("V22", "Y2", "V20 U10") + I("V22 V20 U10", "Y2")
                - cross - I("V22 V20", "U11", "U10"), "r1_2r2"),
        ),
        factors=_CHAIN7,
        sizes={v: 2 for v in _AUX7},
        description="rate-split superposition with GP and cross binning, projected to (R1, R2)",
    )
    bonus = I("V11 V20", "U11", "U10")
    specs["inner_simultaneous"] = RegionSpec(
        "inner_simultaneous",
        _SPLIT_VARS,
        tuple(_split_common_rows()) + (
            Row({"L11": 1}, I("V11 U11", "Y1", "V20 U10") + bonus, "dec1_a"),
            Row({"L11": 1, "L20": 1}, I("V11 U11 V20", "Y1", "U10") + bonus, "dec1_b"),
            Row({"L11": 1, "L20": 1, "R10": 1}, I("V11 U11 V20 U10", "Y1") + bonus, "dec1_c"),
            Row({"L22": 1}, I("V22", "Y2", "V20 U10"), "dec2_a"),
            Row({"L22": 1, "L20": 1}, I("V22 V20", "Y2", "U10"), "dec2_b"),
            Row({"L22": 1, "L20": 1, "R10": 1}, I("V22 V20 U10", "Y2"), "dec2_c"),
        ),
        _EQ_SPLIT,
        _CHAIN7,
        {v: 2 for v in _AUX7},
        "same scheme with split rates and bin sizes, simultaneous decoding",
    )
    specs["inner_sequential"] = RegionSpec(
        "inner_sequential",
        _SPLIT_VARS,
        tuple(_split_common_rows()) + (
            Row({"L20": 1}, I("V20", "Y1", "U10"), "common_y1"),
            Row({"L20": 1}, I("V20", "Y2", "U10"), "common_y2"),
            Row({"R10": 1, "L20": 1}, I("V20 U10", "Y1"), "cloud_y1"),
            Row({"R10": 1, "L20": 1}, I("V20 U10", "Y2"), "cloud_y2"),
            Row({"L11": 1}, I("V11 U11", "Y1", "V20 U10") + bonus, "private_1"),
            Row({"L22": 1}, I("V22", "Y2", "V20 U10"), "private_2"),
        ),
        _EQ_SPLIT,
        _CHAIN7,
        {v: 2 for v in _AUX7},
        "same scheme with sequential decoding of the common layer first",
    )
    outer_factors = (("U", ()), ("X1", ("U",)), ("X2", ("U", "X1")))
    specs["outer"] = RegionSpec(
        "outer",
        ("R1", "R2"),
        (
            Row({"R1": 1}, I("X1 U", "Y1"), "r1"),
            Row({"R2": 1}, I("X2", "Y2", "X1"), "r2"),
            Row({"R1": 1, "R2": 1}, I("X1 U", "Y1") + I("X2", "Y2", "X1 U"), "sum"),
        ),
        factors=outer_factors,
        sizes={"U": 4, "X1": 2, "X2": 2},
        description="outer bound over p(u, x1, x2)",
    )
    specs["semidet_capacity"] = RegionSpec(
        "semidet_capacity",
        ("R1", "R2"),
        (
            Row({"R1": 1}, I("X1 U", "Y1"), "r1"),
            Row({"R2": 1}, H("Y2", "X1"), "r2"),
            Row({"R1": 1, "R2": 1}, I("X1 U", "Y1") + H("Y2", "X1 U"), "sum"),
        ),
        factors=outer_factors,
        sizes={"U": 4, "X1": 2, "X2": 2},
        description="capacity rows when y2 is a deterministic function of the inputs",
    )
    x12 = (("X1", ()), ("X2", ("X1",)))
    specs["strong_interference"] = RegionSpec(
        "strong_interference",
        ("R1", "R2"),
        (
            Row({"R2": 1}, I("X2", "Y2", "X1"), "r2"),
            Row({"R1": 1, "R2": 1}, I("X1 X2", "Y1"), "sum"),
        ),
        factors=x12,
        sizes={"X1": 2, "X2": 2},
        description="capacity under strong interference",
    )
    ux = (("U", ()), ("X1", ("U",)), ("X2", ("U", "X1")))
    specs["weak_interference"] = RegionSpec(
        "weak_interference",
        ("R1", "R2"),
        (
            Row({"R1": 1}, I("U X1", "Y1"), "r1"),
            Row({"R2": 1}, I("X2", "Y2", "U X1"), "r2"),
        ),
        factors=ux,
        sizes={"U": 2, "X1": 2, "X2": 2},
        description="capacity under weak interference (before convex hull)",
    )
    specs["wu"] = RegionSpec(
        "wu",
        ("R1", "R2"),
        (
            Row({"R1": 1}, I("U X1", "Y1"), "r1"),
            Row({"R2": 1}, I("V", "Y2") - I("V", "U X1"), "r2"),
        ),
        factors=(("U", ()), ("X1", ("U",)), ("V", ("U", "X1")), ("X2", ("V", "U", "X1"))),
        sizes={"U": 2, "X1": 2, "V": 2, "X2": 2},
        description="GP binning of user 2 against user 1's codewords",
    )
    specs["jiang_xin"] = RegionSpec(
        "jiang_xin",
        ("R1", "R2", "R22", "R20"),
        (
            Row({"R1": 1}, I("W", "Y1 U", "Q"), "r1"),
            Row({"R1": 1, "R20": 1}, I("W U", "Y1", "Q"), "r1_r20"),
            Row({"R20": 1}, I("U", "Y2 V", "Q") - I("U", "W", "Q"), "r20"),
            Row({"R22": 1}, I("V", "Y2 U", "Q") - I("V", "W", "Q"), "r22"),
            Row({"R20": 1, "R22": 1}, I("U V", "Y2", "Q") + I("U", "V", "Q") - I("U", "W", "Q") - I("V", "W", "Q"), "r2"),
        ),
        (({"R2": 1}, {"R22": 1, "R20": 1}),),
        (("Q", ()), ("W", ("Q",)), ("X1", ("Q", "W")), ("U", ("W", "Q")), ("V", ("W", "Q")), ("X2", ("U", "V", "W", "Q"))),
        {"Q": 2, "W": 2, "X1": 2, "U": 2, "V": 2, "X2": 2},
        "Jiang-Xin region before elimination",
    )
    maric_vars = ("Q", "X1a", "X1b", "U2c", "U2a", "X1", "X2")
    specs["maric"] = RegionSpec(
        "maric",
        ("R1", "R2", "R1a", "R1b", "R2a", "R2c"),
        (
            Row({"R1": 1}, I("X1a X1b", "Y1 U2c", "Q"), "r1"),
            Row({"R1": 1, "R2c": 1}, I("X1a X1b U2c", "Y1", "Q"), "r1_r2c"),
            Row({"R1b": 1}, I("X1b", "Y1 U2c", "X1a Q"), "r1b"),
            Row({"R1b": 1, "R2c": 1}, I("X1b U2c", "Y1", "X1a Q"), "r1b_r2c"),
            Row({"R2a": 1}, I("U2a", "Y2", "U2c Q") - I("U2a", "X1a X1b", "U2c Q"), "r2a"),
            Row({"R2": 1}, I("U2c U2a", "Y2", "Q") - I("U2c U2a", "X1a X1b", "Q"), "r2"),
        ),
        (({"R1": 1}, {"R1a": 1, "R1b": 1}), ({"R2": 1}, {"R2a": 1, "R2c": 1})),
        tuple((v, maric_vars[:i]) for i, v in enumerate(maric_vars)),
        {v: 2 for v in maric_vars},
        "Maric-Goldsmith-Kramer-Shamai region with split primary message",
    )
    merged_vars = ("Q", "W", "U2c", "U2a", "X1", "X2")
    specs["maric_merged"] = RegionSpec(
        "maric_merged",
        ("R1", "R2", "R2a", "R2c"),
        (
            Row({"R1": 1}, I("W", "Y1 U2c", "Q"), "r1"),
            Row({"R1": 1, "R2c": 1}, I("W U2c", "Y1", "Q"), "r1_r2c"),
            Row({"R2a": 1}, I("U2a", "Y2", "U2c Q") - I("U2a", "W", "U2c Q"), "r2a"),
            Row({"R2": 1}, I("U2c U2a", "Y2", "Q") - I("U2c U2a", "W", "Q"), "r2"),
        ),
        (({"R2": 1}, {"R2a": 1, "R2c": 1}),),
        tuple((v, merged_vars[:i]) for i, v in enumerate(merged_vars)),
        {v: 2 for v in merged_vars},
        "same region without splitting the primary message",
    )
    marton_min = [I("W", "Y1"), I("W", "Y2")]
    marton_rows = [Row({"R1": 1}, I("W V1", "Y1"), "r1"), Row({"R2": 1}, I("W V2", "Y2"), "r2")]
    for k, m in enumerate(marton_min):
        marton_rows.append(Row({"R1": 1, "R2": 1}, m + I("V1", "Y1", "W") + I("V2", "Y2", "W") - I("V1", "V2", "W"), f"sum_{k + 1}"))
    bc_vars = ("W", "V1", "V2", "X2")
    bc_factors = tuple((v, bc_vars[:i]) for i, v in enumerate(bc_vars))
    specs["marton"] = RegionSpec(
        "marton", ("R1", "R2"), tuple(marton_rows), (), bc_factors, {v: 2 for v in bc_vars},
        "Marton broadcast region",
    )
    eq_rows = []
    for k, m in enumerate(marton_min):
        eq_rows.append(Row({"R1": 1}, I("V1", "Y1", "W") + m, f"r1_{k + 1}"))
        eq_rows.append(Row({"R2": 1}, I("V2", "Y2", "W") + m, f"r2_{k + 1}"))
        eq_rows.append(Row({"R1": 1, "R2": 1}, m + I("V1", "Y1", "W") + I("V2", "Y2", "W") - I("V1", "V2", "W"), f"sum_{k + 1}"))
    specs["marton_projected"] = RegionSpec(
        "marton_projected", ("R1", "R2"), tuple(eq_rows), (), bc_factors, {v: 2 for v in bc_vars},
        "Marton rows as obtained by eliminating the split rates of the sequential scheme",
    )
    return specs


SPECS = _build_specs()


def get_spec(ident: str) -> RegionSpec:
    try:
        return SPECS[ident]
    except KeyError:
        raise KeyError(f"unknown region spec {ident!r}; known: {sorted(SPECS)}") from None
