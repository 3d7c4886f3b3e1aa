"""Special-case reductions of the rate-split inner bound.

Each check maps the auxiliaries of the general scheme onto a smaller
distribution (``base``), evaluates both regions on it, and reports the
numerical relation between them.

The relation depends on the case:
- ``"equal"``: the two polygons agree.
- ``"subset"``: the smaller region lies inside the general one.
- ``"rows_equal"``: designated rows take equal values.
- ``"report"``: side-by-side numbers with nothing asserted.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InfeasibleSystem, NotDeterministic, SubstitutionInconsistent
from ..fm import project
from ..geometry import envelope_from_halfplanes, max_deviation, subset
from .pmf import DiscreteChannel, JointPmf, extend_with_channel, mutual_information
from .specs import SPECS, RegionSpec, evaluate, get_spec

INDEP_TOL = 1e-10


@dataclass
class ReductionReport:
    case: str
    relation: str
    holds: bool | None
    max_gap: float
    details: dict = field(default_factory=dict)

    def line(self):
        verdict = {True: "PASS", False: "FAIL", None: "REPORT"}[self.holds]
        return f"{self.case}: {self.relation} {verdict} max_gap={self.max_gap:.3g}"


# substitutions applied to the general scheme, by case
ALIASES = {
    "strong": {"V11": (), "V22": (), "U11": (), "U10": ("X1",), "V20": ("X2",)},
    "weak": {"V11": (), "V20": (), "U11": (), "V22": ("X2",), "U10": ("U", "X1")},
    "wu": {"V20": (), "U10": (), "V11": (), "U11": ("U", "X1"), "V22": ("V",)},
    "jiang_xin": {"U10": ("Q",), "U11": ("W",), "V11": (), "V20": ("U",), "V22": ("V", "U")},
    "maric": {"U10": ("Q",), "U11": ("X1a", "X1b"), "V11": (), "V22": ("U2a",), "V20": ("U2c",)},
    "marton": {"U11": (), "U10": (), "V20": ("W",), "V11": ("V1",), "V22": ("V2",)},
    "semidet": {"U10": ("X1",), "V11": ("U",), "V22": ("X2",), "U11": (), "V20": ()},
}

CASES = ("strong", "weak", "wu", "devroye", "jiang_xin", "maric", "marton")


def substituted(case: str, base: str = "inner_projected") -> RegionSpec:
    """General-scheme spec with the auxiliaries of ``case`` substituted."""
    return get_spec(base).substitute(ALIASES[case], ident=f"{base}[{case}]")


def _joint(p: JointPmf, ch: DiscreteChannel | None):
    if ch is None:
        if "Y1" not in p or "Y2" not in p:
            raise ValueError("a channel is required when the distribution has no outputs")
        return p
    return extend_with_channel(p, ch)


def _envelope(sys):
    """Envelope of a 2-D system, or None when it is empty."""
    try:
        return envelope_from_halfplanes(sys)
    except InfeasibleSystem:
        return None


def region_envelope(spec: RegionSpec, joint: JointPmf):
    """(R1, R2) envelope of ``spec`` on ``joint``, or None if empty.

    A negative right-hand side makes the contribution empty.
    """
    ev = evaluate(spec, joint)
    if ev.negative_rows:
        return None
    sys = ev.system
    if tuple(sys.vars) != ("R1", "R2"):
        sys = project(sys, ["R1", "R2"]).output
    return _envelope(sys)


def _gap(a, b):
    """Deviation between two envelopes; None stands for the empty region."""
    if a is None and b is None:
        return 0.0
    if a is None or b is None:
        return float("inf")
    return float(max_deviation(a, b))


def _require(p: JointPmf, names, case):
    missing = [v for v in names if v not in p]
    if missing:
        raise SubstitutionInconsistent(f"{case}: base distribution lacks {missing}")


def _require_zero(value, what, case):
    if value > INDEP_TOL:
        raise SubstitutionInconsistent(f"{case}: {what} = {value:.3g}, must vanish")


def check_reduction(case: str, base: JointPmf, ch: DiscreteChannel | None = None, tol: float | None = None) -> ReductionReport:
    """Evaluate one special-case reduction on a base distribution.

    Parameters
    ----------
    case : str
        One of ``CASES``.
    base : JointPmf
        Joint law of the variables the reduced region is written in, for
        example (Q, W, X1, U, V, X2) for ``"jiang_xin"``.
    ch : DiscreteChannel, optional
        Omitted when ``base`` already contains Y1 and Y2.
    tol : float, optional
        Equality/containment tolerance; 1e-9 for row and equality checks,
        1e-7 for polygon containment.

    Raises
    ------
    SubstitutionInconsistent
        If ``base`` lacks a variable of the case or violates the
        factorization the reduced region assumes.
    """
    if case not in CASES:
        raise ValueError(f"unknown reduction {case!r}; known: {CASES}")
    fn = globals()[f"_check_{case}"]
    return fn(base, ch, tol)


def _check_strong(p, ch, tol):
    tol = 1e-9 if tol is None else tol
    _require(p, ["X1", "X2"], "strong")
    j = _joint(p, ch)
    conds = {
        "I(X2;Y2|X1) <= I(X2;Y1|X1)": mutual_information(j, "X2", "Y2", "X1") <= mutual_information(j, "X2", "Y1", "X1") + tol,
        "I(X1X2;Y1) <= I(X1X2;Y2)": mutual_information(j, "X1 X2", "Y1") <= mutual_information(j, "X1 X2", "Y2") + tol,
    }
    a = region_envelope(substituted("strong"), j)
    b = region_envelope(SPECS["strong_interference"], j)
    return _equal_report("strong", a, b, tol, conds)


def _check_weak(p, ch, tol):
    tol = 1e-9 if tol is None else tol
    _require(p, ["U", "X1", "X2"], "weak")
    j = _joint(p, ch)
    conds = {
        "I(X1;Y1) <= I(X1;Y2)": mutual_information(j, "X1", "Y1") <= mutual_information(j, "X1", "Y2") + tol,
        "I(U;Y1|X1) <= I(U;Y2|X1)": mutual_information(j, "U", "Y1", "X1") <= mutual_information(j, "U", "Y2", "X1") + tol,
    }
    a = region_envelope(substituted("weak"), j)
    b = region_envelope(SPECS["weak_interference"], j)
    return _equal_report("weak", a, b, tol, conds)


def _check_wu(p, ch, tol):
    tol = 1e-9 if tol is None else tol
    _require(p, ["U", "X1", "V", "X2"], "wu")
    j = _joint(p, ch)
    a = region_envelope(substituted("wu"), j)
    b = region_envelope(SPECS["wu"], j)
    return _equal_report("wu", a, b, tol, {})


def _equal_report(case, a, b, tol, conds):
    gap = _gap(a, b)
    det = {"conditions": conds, "conditions_hold": all(conds.values()),
           "empty": (a is None, b is None)}
    return ReductionReport(case, "equal", gap <= tol, gap, det)


def _check_devroye(p, ch, tol):
    """Report the slopes of the projected general region; nothing is asserted."""
    j = _joint(p, ch)
    ev = evaluate(SPECS["inner_simultaneous"], j)
    out = project(ev.system, ["R1", "R2"]).output
    slopes = []
    for a, _ in out.rows():
        if a[0] > 0 or a[1] > 0:
            lo = min(x for x in a if x > 0) if (a > 0).all() else max(a)
            slopes.append(tuple(float(np.round(x / lo, 6)) for x in a))
    empty = bool(ev.negative_rows) or (out.n_rows == 1 and not np.any(out.A) and out.c[0] < 0)
    return ReductionReport("devroye", "report", None, float("nan"),
                           {"slopes": [] if empty else sorted(set(slopes)), "empty": empty,
                            "negative_rows": ev.negative_rows})


def _check_jiang_xin(p, ch, tol):
    tol = 1e-7 if tol is None else tol
    _require(p, ["Q", "W", "X1", "U", "V", "X2"], "jiang_xin")
    _require_zero(mutual_information(p, "U", "V", "W Q"), "I(U;V|WQ)", "jiang_xin")
    _require_zero(mutual_information(p, "X1", "U V X2", "W Q"), "I(X1;UVX2|WQ)", "jiang_xin")
    j = _joint(p, ch)
    jx = region_envelope(SPECS["jiang_xin"], j)
    big = region_envelope(get_spec("inner_simultaneous").substitute(ALIASES["jiang_xin"]), j)
    if jx is None:
        return ReductionReport("jiang_xin", "subset", True, 0.0, {"empty": (True, big is None)})
    if big is None:
        return ReductionReport("jiang_xin", "subset", False, float("inf"), {"empty": (False, True)})
    r = subset(jx, big, tol=tol)
    return ReductionReport("jiang_xin", "subset", bool(r), float(r.max_violation), {"empty": (False, False)})


def _bin_constants(spec: RegionSpec, joint: JointPmf):
    """Binning penalties of the common and cognitive-private layers, by label."""
    rows = {r.label: r for r in spec.rows}
    return {"L20": -rows["bin_20"].rhs.value(joint), "L22": -rows["bin_22"].rhs.value(joint)}


# designated rows of the simultaneous scheme and the Maric rows they become
_MARIC_ROWS = {"dec1_a": "r1", "dec1_b": "r1_r2c", "dec2_a": "r2a", "dec2_b": "r2"}


def _check_maric(p, ch, tol):
    """Designated rows of the general scheme against the Maric rows.

    With R1 = R11 = L11 and each bin index rate written as the message
    rate plus its binning penalty, rows dec1_a, dec1_b, dec2_a and dec2_b
    of the general scheme must equal Maric rows 1, 2, 5 and 6. The merged
    region with W = (X1a, X1b) is checked against the same rows.
    """
    tol = 1e-9 if tol is None else tol
    _require(p, ["Q", "X1a", "X1b", "U2c", "U2a", "X1", "X2"], "maric")
    j = _joint(p, ch)
    general = get_spec("inner_simultaneous").substitute(ALIASES["maric"])
    consts = _bin_constants(general, j)
    grows = {r.label: r for r in general.rows}
    mrows = {r.label: r for r in SPECS["maric"].rows}
    merged = SPECS["maric_merged"].substitute({"W": ("X1a", "X1b")})
    wrows = {r.label: r for r in merged.rows}
    gaps = {}
    for glabel, mlabel in _MARIC_ROWS.items():
        g = grows[glabel]
        shift = sum(coef * consts.get(v, 0.0) for v, coef in g.lhs.items())
        gval = g.rhs.value(j) - shift
        mval = mrows[mlabel].rhs.value(j)
        wval = wrows[mlabel].rhs.value(j)
        gaps[mlabel] = (gval, mval, wval)
    gap = max(max(abs(a - b), abs(b - c)) for a, b, c in gaps.values())
    return ReductionReport("maric", "rows_equal", bool(gap <= tol), float(gap), {"rows": gaps})


def _check_marton(p, ch, tol):
    """Sequential scheme with transmitter 1 absent against the projected Marton rows."""
    tol = 1e-9 if tol is None else tol
    _require(p, ["W", "V1", "V2", "X1", "X2"], "marton")
    _require_zero(p.entropy("X1"), "H(X1)", "marton")
    j = _joint(p, ch)
    seq = get_spec("inner_sequential").substitute(ALIASES["marton"])
    a = region_envelope(seq, j)
    b = region_envelope(SPECS["marton_projected"], j)
    gap = _gap(a, b)
    return ReductionReport("marton", "equal", gap <= tol, gap, {"empty": (a is None, b is None)})


def with_constant(p: JointPmf, name: str) -> JointPmf:
    """Append a constant (single-letter) variable to ``p``."""
    return JointPmf(p.var_names + (name,), p.table[..., None])


# ---------------------------------------------------------------------------
# semi-deterministic channels


def semidet_capacity_rows(p: JointPmf, ch: DiscreteChannel):
    """Capacity rows for a channel with y2 a function of (x1, x2).

    Returns
    -------
    system : HalfPlaneSystem
        {R1 <= I(X1U;Y1), R2 <= H(Y2|X1), R1 + R2 <= I(X1U;Y1) + H(Y2|X1U)}
        plus nonnegativity.
    condition : bool
        Whether I(X1;Y1) <= I(X1;Y2) holds for this ``p``.
    """
    if not ch.y2_is_deterministic():
        raise NotDeterministic("y2 is not a deterministic function of (x1, x2)")
    j = extend_with_channel(p, ch)
    sys = evaluate(SPECS["semidet_capacity"], j).system
    flag = mutual_information(j, "X1", "Y1") <= mutual_information(j, "X1", "Y2") + 1e-12
    return sys, bool(flag)


def semidet_identity_gap(p: JointPmf, ch: DiscreteChannel):
    """(I(Y2;U|X1), I(U;X2|X1)) on ``p`` extended by ``ch``."""
    j = extend_with_channel(p, ch)
    return mutual_information(j, "Y2", "U", "X1"), mutual_information(j, "U", "X2", "X1")


def semidet_inner_spec() -> RegionSpec:
    """Five-row inner bound with U10 = X1, V11 = U, V22 = X2 and U11, V20 constant.

    The result is searchable over p(u, x1, x2), like the capacity rows.
    """
    cap = SPECS["semidet_capacity"]
    return get_spec("inner_projected").substitute(
        ALIASES["semidet"], ident="inner_projected[semidet]", factors=cap.factors, sizes=dict(cap.sizes))


def semidet_admissible(joint: JointPmf, tol=1e-9) -> bool:
    """True when the identity gap is at most ``tol`` and I(X1;Y1) <= I(X1;Y2)."""
    gap = abs(mutual_information(joint, "Y2", "U", "X1") - mutual_information(joint, "U", "X2", "X1"))
    flag = mutual_information(joint, "X1", "Y1") <= mutual_information(joint, "X1", "Y2") + 1e-12
    return gap <= tol and flag


@dataclass
class SemidetComparison:
    inner: dict
    capacity: dict
    identity: tuple
    condition: bool

    @property
    def identity_gap(self):
        return abs(self.identity[0] - self.identity[1])


def semidet_compare(p: JointPmf, ch: DiscreteChannel) -> SemidetComparison:
    """Row values of the substituted inner bound next to the capacity rows.

    The inner rows are ``r1``, ``r2`` and the smaller of the two
    single-weight sum rows.
    """
    if not ch.y2_is_deterministic():
        raise NotDeterministic("y2 is not a deterministic function of (x1, x2)")
    j = extend_with_channel(p, ch)
    ev = evaluate(semidet_inner_spec(), j)
    vals = dict(zip([r.label for r in ev.spec.rows], ev.rhs))
    inner = {"r1": vals["r1"], "r2": vals["r2"], "sum": min(vals["sum_a"], vals["sum_b"]), "r1_2r2": vals["r1_2r2"]}
    cap = dict(zip(["r1", "r2", "sum"], evaluate(SPECS["semidet_capacity"], j).rhs))
    flag = mutual_information(j, "X1", "Y1") <= mutual_information(j, "X1", "Y2") + 1e-12
    return SemidetComparison(inner, cap, semidet_identity_gap(p, ch), bool(flag))
