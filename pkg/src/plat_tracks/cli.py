"""Command-line front end.

Subcommands: validate, gen, tracks, trace, weakpairs.  Exit codes: 0 when
the run succeeds and every checked claim holds, 1 for a mathematical
failure or bad argument, 2 for I/O or parse failures.
"""

import argparse
import os
import sys

from . import convention
from .covering import CoverageInconsistency, certify_coverage, delta_profile
from .curves import DualCurve
from .plat import PlatError, PlatSpec, generate_family_instance
from .render import render_dot, render_svg
from .traingraph import build_train_graph, face_census
from .weakpairs import verify_keen


def _load_spec(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise _IOFailure(f"cannot read {path}: {e}")
    try:
        return PlatSpec.from_json(text)
    except PlatError as e:
        raise _IOFailure(f"cannot parse {path}: {e}")


class _IOFailure(Exception):
    pass


class _MathFailure(Exception):
    pass


def _write(path, text):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as e:
        raise _IOFailure(f"cannot write {path}: {e}")


def cmd_validate(args):
    spec = _load_spec(args.spec)
    violations = spec.validate_family()
    if violations:
        for v in violations:
            print(f"violation: {v}")
        raise _MathFailure("spec is not in the family")
    print(f"ok: ({spec.n},{spec.m})-plat in the family; "
          f"n1={spec.n1} n2={spec.n2}")


def cmd_gen(args):
    mags = tuple(int(x) for x in args.mags.split(","))
    try:
        spec = generate_family_instance(args.m, args.n2, mags, args.seed)
    except PlatError as e:
        raise _MathFailure(str(e))
    text = spec.to_json() + "\n"
    if args.out:
        _write(args.out, text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)


def cmd_tracks(args):
    spec = _load_spec(args.spec)
    if not (1 <= args.level <= spec.n - 1):
        raise _MathFailure(f"level must be in 1..{spec.n-1}")
    g = build_train_graph(spec, args.level)
    census = face_census(g)
    want = [0] + [1] * (2 * spec.m)
    print(f"level {args.level}: {len(g.taos)} taos, {len(g.eyelets)} eyelets, "
          f"{len(g.connectors)} connectors")
    print(f"face census (punctures per face): {census}")
    if args.svg:
        _write(args.svg, render_svg(g))
        print(f"wrote {args.svg}")
    if args.dot:
        _write(args.dot, render_dot(g))
        print(f"wrote {args.dot}")
    if census != want:
        raise _MathFailure("face census violated")


def _parse_curve(text, n, level):
    if text.startswith("round:"):
        try:
            a, b = text[6:].split("-")
            return DualCurve.round_curve(n, int(a), int(b), level)
        except (ValueError, TypeError) as e:
            raise _MathFailure(f"bad curve literal {text!r}: {e}")
    if text.startswith("coord:"):
        try:
            flat = [int(x) for x in text[6:].strip("[]").split(",")]
            return DualCurve.from_coord_list(flat, level)
        except (ValueError, TypeError) as e:
            raise _MathFailure(f"bad curve literal {text!r}: {e}")
    raise _MathFailure(f"bad curve literal {text!r} (want round:a-b or coord:[..])")


def cmd_trace(args):
    spec = _load_spec(args.spec)
    curve = _parse_curve(args.curve, 2 * spec.m, spec.n)
    target = args.to_level
    if not (1 <= target <= spec.n):
        raise _MathFailure(f"target level must be in 1..{spec.n}")
    c = curve
    print(f"level {c.level}: weight {c.diagram.total_weight()}")
    for level in range(spec.n - 1, target - 1, -1):
        c = c.apply_braid(spec.row_braid_word(level), new_level=level)
        prof = delta_profile(c, spec) if c.level >= 2 else []
        prof_s = " ".join(f"slot{j}(gap{g})={v}" for j, g, v in prof)
        print(f"level {level}: weight {c.diagram.total_weight()} {prof_s}")
    rightmost = c.diagram.chord_crossings(2 * spec.m - 1)
    print(f"rightmost cap arc crossings at level {c.level}: {rightmost}")
    print("final coordinates:",
          "[" + ",".join(str(v) for v in c.diagram.coord_list()) + "]")
    try:
        if curve.bounds_above_at_top():
            certs = certify_coverage(curve, spec)
            last = certs[-1]
            print(f"coverage certificate at level 1: taos {list(last.taos)}, "
                  f"minigraph {sorted(last.minigraph.elements)}")
    except (ValueError, CoverageInconsistency) as e:
        print(f"coverage certification unavailable: {e}")


def cmd_weakpairs(args):
    spec = _load_spec(args.spec)
    violations = spec.validate_family()
    rep = verify_keen(spec, args.depth, jobs=args.jobs,
                      family_required=False)
    print(f"candidates: {len(rep.above)} above, {len(rep.below)} below")
    print(f"zero entries: {rep.zero_pairs}")
    for name, val in sorted(rep.flags.items()):
        print(f"flag {name}: {'pass' if val else 'FAIL'}")
    if args.report:
        _write(args.report, rep.to_json() + "\n")
        print(f"wrote {args.report}")
    if violations:
        print("note: spec not in the family; keenness flags are informational")
        return
    if not rep.keen:
        raise _MathFailure("keenness flags failed")
    print(f"keen at depth {args.depth}")


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="plat-tracks",
        description="Exact plat train-graph and weak-reducing-pair toolkit")
    parser.add_argument("--flip-convention", action="store_true",
                        help="diagnostic: mirror the handedness convention")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check family membership")
    p.add_argument("spec")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate a family instance")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n2", type=int, required=True)
    p.add_argument("--mags", default="4", help="comma list of magnitudes")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("tracks", help="build and render a level train graph")
    p.add_argument("spec")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--svg")
    p.add_argument("--dot")
    p.set_defaults(func=cmd_tracks)

    p = sub.add_parser("trace", help="push a curve down the plat")
    p.add_argument("spec")
    p.add_argument("--curve", required=True,
                   help="round:a-b or coord:[..] at the top level")
    p.add_argument("--to-level", type=int, default=1)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("weakpairs", help="bounded keen weak-reducibility check")
    p.add_argument("spec")
    p.add_argument("--depth", type=int, default=1)
    p.add_argument("--report")
    p.add_argument("--jobs", type=int,
                   default=int(os.environ.get("PLAT_TRACKS_JOBS", "1")))
    p.set_defaults(func=cmd_weakpairs)

    args = parser.parse_args(argv)
    convention.set_flipped(args.flip_convention)
    try:
        args.func(args)
    except _MathFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except CoverageInconsistency as e:
        print(f"inconsistency: {e}", file=sys.stderr)
        return 1
    except _IOFailure as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
