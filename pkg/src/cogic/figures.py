"""Figure presets for the cognitive Z channel: curves, overlay SVG and a short verdict report."""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import DEFAULT_SWEEP, StandardZic, SweepGrid, gamma, region
from .geometry import max_deviation, subset
from .plotting import envelopes_svg

LABELS = {"r1": "R1", "r2": "R2", "r3": "R3", "r4": "R4", "r5": "R5", "outer": "Ro"}


@dataclass(frozen=True)
class FigureSpec:
    ident: str
    K: float
    b: float
    regions: tuple
    P1: float = 6.0
    P2: float = 6.0

    @property
    def channel(self):
        return StandardZic(self.P1, self.P2, self.K, self.b)

    @property
    def title(self):
        return f"P1={self.P1:g}, P2={self.P2:g}, K={self.K:g}, b={self.b:g}"


def _series(prefix, ks, b, regions):
    return {f"{prefix}{s}": FigureSpec(f"{prefix}{s}", k, b, regions) for s, k in zip("abc", ks)}


FIGURES = {}
FIGURES.update(_series("fig5", (1.5, 2.0, 3.0), 1.5, ("r1", "r3")))
FIGURES.update(_series("fig6", (1.5, 2.0, 3.0), 1.5, ("r1", "r3", "r4")))
FIGURES.update(_series("fig7", (2.0, 1.0, 0.9), 0.6, ("r3", "r5", "r4")))
FIGURES["fig8a"] = FigureSpec("fig8a", 1.0, 0.6, ("r5", "r4", "outer"))
FIGURES["fig8b"] = FigureSpec("fig8b", 1.2, 0.6, ("r5", "r4", "outer"))


def get_figure(ident):
    try:
        return FIGURES[ident]
    except KeyError:
        raise ValueError(f"unknown figure {ident!r}; choose from {sorted(FIGURES)}") from None


def _verdicts(envs, c: StandardZic):
    """Pairwise subset verdicts (tol 5e-3) and deviations between the curves."""
    out = []
    names = list(envs)
    for a in names:
        for b in names:
            if a != b:
                r = subset(envs[a], envs[b], 5e-3)
                out.append({"subset": [a, b], "holds": bool(r), "max_violation": r.max_violation})
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            out.append({"max_deviation": [a, b], "value": max_deviation(envs[a], envs[b])})
    return out


def build_figure(ident, sweep: SweepGrid = DEFAULT_SWEEP):
    """Envelopes, overlay SVG and report of one figure preset.

    Returns
    -------
    envs : dict name -> Envelope
    svg : str
    report : dict
    """
    fig = get_figure(ident)
    c = fig.channel
    envs = {name: region(name, c, sweep) for name in fig.regions}
    markers = []
    report = {"figure": ident, "params": {"P1": fig.P1, "P2": fig.P2, "K": fig.K, "b": fig.b},
              "verdicts": _verdicts(envs, c)}
    if ident == "fig8a":
        corner = (c.C1, gamma(c.P2 / (1.0 + c.b**2 * c.P1)))
        markers.append(("corner", *corner))
        report["corner"] = {
            "point": list(corner),
            "outer_at_C1": float(envs["outer"].value_at(c.C1)),
            "r5_at_C1": float(envs["r5"].value_at(c.C1)),
        }
    svg = envelopes_svg([(LABELS[n], e) for n, e in envs.items()], title=fig.title, markers=markers)
    return envs, svg, report
