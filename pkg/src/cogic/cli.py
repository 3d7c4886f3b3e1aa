"""Command-line front end.

Subcommands::

    cogic region r5 --p1 6 --p2 6 --k 1 --b 0.6 -o r5.csv
    cogic figure fig6c -o out/
    cogic fm system.json --keep R1 R2 -o proj.json
    cogic discrete inner_projected --pmf p.json --channel ch.json -o out/
    cogic discrete marton --check marton --n 100 --seed 2
    cogic compare r3 r5 --p1 6 --p2 6 --k 1 --b 0.6

``--config FILE`` reads a JSON object whose keys replace the matching
flags (for example ``{"p1": 6, "p2": 6, "b": 0.6}``).

Exit status: 0 on success, 2 on usage errors, 3 when an input violates a
precondition (regime, alphabet, missing variable), 4 on I/O and parse
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from .errors import CogicError
from .fm import project
from .gaussian import REGIONS, StandardZic, SweepGrid, region
from .geometry import HalfPlaneSystem, max_deviation, subset

EXIT_OK = 0
EXIT_PRECONDITION = 3
EXIT_IO = 4


class InputError(Exception):
    """Unreadable or malformed input file."""


class UsageError(Exception):
    """A required flag is missing."""


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"{path} is not valid JSON: {e}") from e


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
        return
    d = os.path.dirname(path)
    if d:
        os.makedirs(d, exist_ok=True)
    with open(path, "w") as fh:
        fh.write(text)


def _channel(args):
    for name in ("p1", "p2"):
        if getattr(args, name) is None:
            raise UsageError(f"--{name} is required")
    k = args.k if args.k is not None else 1.0
    b = args.b if args.b is not None else 1.0
    return StandardZic(args.p1, args.p2, k, b)


def _sweep(args):
    return SweepGrid(r1_samples=args.grid) if args.grid else SweepGrid()


def _envelope_json(name, c, env):
    return json.dumps({
        "region": name,
        "params": {"P1": c.P1, "P2": c.P2, "K": c.K, "b": c.b},
        "r1": [float(x) for x in env.r1_grid],
        "r2": [float(y) for y in env.r2_max],
    }, indent=2) + "\n"


def cmd_region(args):
    from .plotting import envelopes_svg

    c = _channel(args)
    env = region(args.name, c, _sweep(args))
    if args.format == "csv":
        text = env.to_csv()
    elif args.format == "json":
        text = _envelope_json(args.name, c, env)
    else:
        text = envelopes_svg([(args.name.upper(), env)], title=f"P1={c.P1:g}, P2={c.P2:g}, K={c.K:g}, b={c.b:g}")
    _write(args.out, text)


def cmd_figure(args):
    from .figures import build_figure

    envs, svg, report = build_figure(args.ident, _sweep(args))
    out = args.out or "."
    os.makedirs(out, exist_ok=True)
    for name, env in envs.items():
        _write(os.path.join(out, f"{args.ident}_{name}.csv"), env.to_csv())
    _write(os.path.join(out, f"{args.ident}.svg"), svg)
    _write(os.path.join(out, f"{args.ident}_report.json"), json.dumps(report, indent=2) + "\n")
    for v in report["verdicts"]:
        if "subset" in v:
            a, b = v["subset"]
            print(f"{a} subset {b}: {'yes' if v['holds'] else 'no'} (max violation {v['max_violation']:.3g})")
    if "corner" in report:
        cp = report["corner"]
        print(f"corner ({cp['point'][0]:.6f}, {cp['point'][1]:.6f}); outer at C1 {cp['outer_at_C1']:.6f}; "
              f"R5 at C1 {cp['r5_at_C1']:.6f}")


def cmd_fm(args):
    try:
        sys_ = HalfPlaneSystem.from_json(_read_json(args.input))
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, CogicError):
            raise
        raise InputError(f"{args.input} is not a valid system: {e}") from e
    keep = args.keep or list(sys_.vars)
    rep = project(sys_, keep, exact=args.exact)
    _write(args.out, json.dumps(rep.to_dict(), indent=2) + "\n")


def _load_pmf(path):
    from .discrete.pmf import JointPmf

    try:
        return JointPmf.from_json(_read_json(path))
    except (KeyError, TypeError) as e:
        raise InputError(f"{path} is not a valid distribution: {e}") from e


def _load_channel(path):
    from .discrete.pmf import DiscreteChannel

    try:
        return DiscreteChannel.from_json(_read_json(path))
    except (KeyError, TypeError) as e:
        raise InputError(f"{path} is not a valid channel: {e}") from e


def cmd_discrete(args):
    from .discrete.reductions import check_reduction, region_envelope
    from .discrete.specs import evaluate, get_spec
    from .discrete.pmf import extend_with_channel

    if args.check:
        if args.pmf:
            p = _load_pmf(args.pmf)
            ch = _load_channel(args.channel) if args.channel else None
            reports = [check_reduction(args.check, p, ch)]
        else:
            from .discrete.instances import reduction_instances

            reports = [check_reduction(args.check, p, ch) for p, ch in reduction_instances(args.check, args.n, args.seed)]
        ok = [r.holds for r in reports if r.holds is not None]
        if ok:
            finite = [r.max_gap for r in reports if np.isfinite(r.max_gap)]
            mism = len(reports) - len(finite)
            gap = max(finite, default=0.0)
            verdict = "PASS" if all(ok) else "FAIL"
            print(f"{args.check}: {verdict} on {sum(ok)}/{len(ok)} instances, max gap {gap:.3g}"
                  + (f", {mism} empty-vs-nonempty mismatches" if mism else ""))
        else:
            print(f"{args.check}: report only, {len(reports)} instances")
            for r in reports:
                s = "empty" if r.details.get("empty") else ", ".join(str(d) for d in r.details.get("slopes", []))
                print("  slopes: " + s)
        if args.out:
            _write(args.out, json.dumps([
                {"case": r.case, "relation": r.relation, "holds": r.holds, "max_gap": r.max_gap} for r in reports
            ], indent=2) + "\n")
        return
    if not (args.pmf and args.channel):
        raise UsageError("discrete needs --pmf and --channel (or --check)")
    spec = get_spec(args.spec)
    joint = extend_with_channel(_load_pmf(args.pmf), _load_channel(args.channel))
    ev = evaluate(spec, joint)
    env = region_envelope(spec, joint)
    out = args.out or "."
    os.makedirs(out, exist_ok=True)
    _write(os.path.join(out, f"{args.spec}_system.json"), ev.system.to_json() + "\n")
    if env is None:
        csv = "r1,r2\n"
        print(f"{args.spec}: empty (negative rows: {', '.join(ev.negative_rows) or 'none'})")
    else:
        csv = env.to_csv()
        print(f"{args.spec}: R1 max {env.r1_max:.6g}, R2 max {env.r2_top:.6g}")
    _write(os.path.join(out, f"{args.spec}_polygon.csv"), csv)


def cmd_compare(args):
    c = _channel(args)
    g = _sweep(args)
    a = region(args.a, c, g)
    b = region(args.b_region, c, g)
    ab = subset(a, b, args.tol)
    ba = subset(b, a, args.tol)
    rep = {
        "params": {"P1": c.P1, "P2": c.P2, "K": c.K, "b": c.b},
        f"{args.a}_subset_{args.b_region}": {"holds": bool(ab), "max_violation": ab.max_violation},
        f"{args.b_region}_subset_{args.a}": {"holds": bool(ba), "max_violation": ba.max_violation},
        "max_deviation": max_deviation(a, b),
    }
    _write(args.out, json.dumps(rep, indent=2) + "\n")


def build_parser():
    p = argparse.ArgumentParser(prog="cogic", description="Rate regions of the cognitive interference channel")
    p.add_argument("--config", help="JSON file whose keys replace command-line flags")
    p.add_argument("--seed", type=int, default=0)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 0)")
    sub = p.add_subparsers(dest="command", required=True)

    def gauss(sp):
        sp.add_argument("--p1", type=float)
        sp.add_argument("--p2", type=float)
        sp.add_argument("--k", type=float, help="cooperating-link gain (default 1)")
        sp.add_argument("--b", type=float, help="cross gain (default 1)")
        sp.add_argument("--grid", type=int, default=0, help="R1 samples per envelope")

    r = sub.add_parser("region", parents=[common], help="one Gaussian region as an envelope")
    r.add_argument("name", choices=sorted(REGIONS))
    gauss(r)
    r.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_region)

    from .figures import FIGURES

    f = sub.add_parser("figure", parents=[common], help="all curves of a figure preset")
    f.add_argument("ident", choices=sorted(FIGURES))
    f.add_argument("--grid", type=int, default=0)
    f.add_argument("-o", "--out", help="output directory")
    f.set_defaults(func=cmd_figure)

    m = sub.add_parser("fm", parents=[common], help="Fourier-Motzkin projection of a JSON system")
    m.add_argument("input")
    m.add_argument("--keep", nargs="+")
    m.add_argument("--exact", action="store_true", help="rational arithmetic")
    m.add_argument("-o", "--out")
    m.set_defaults(func=cmd_fm)

    d = sub.add_parser("discrete", parents=[common], help="evaluate a discrete region spec or run a reduction check")
    d.add_argument("spec")
    d.add_argument("--pmf")
    d.add_argument("--channel")
    d.add_argument("--check", help="reduction case to check")
    d.add_argument("--n", type=int, default=20, help="random instances for --check without --pmf")
    d.add_argument("-o", "--out")
    d.set_defaults(func=cmd_discrete)

    c = sub.add_parser("compare", parents=[common], help="subset and deviation report for two Gaussian regions")
    c.add_argument("a", choices=sorted(REGIONS))
    c.add_argument("b_region", metavar="b", choices=sorted(REGIONS))
    gauss(c)
    c.add_argument("--tol", type=float, default=5e-3)
    c.add_argument("-o", "--out")
    c.set_defaults(func=cmd_compare)
    return p


def _apply_config(parser, argv):
    """Re-parse with the config file's keys as defaults; explicit flags still win."""
    args = parser.parse_args(argv)
    if not args.config:
        return args
    cfg = _read_json(args.config)
    if not isinstance(cfg, dict):
        raise InputError(f"{args.config} must hold a JSON object")
    for action in parser._subparsers._group_actions[0].choices.values():
        known = {a.dest for a in action._actions}
        action.set_defaults(**{k: v for k, v in cfg.items() if k in known})
    parser.set_defaults(**{k: v for k, v in cfg.items() if k in ("seed",)})
    return parser.parse_args(argv)


def main(argv=None):
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
        args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    except (CogicError, ValueError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
