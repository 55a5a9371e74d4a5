"""Command line interface.  Reports go to stdout as canonical JSON.

Exit status: 0 success, 1 validation or check failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import serialize as io
from .cacti import frame
from .chains import check_face_contracts
from .circle import (
    ExtClass, algebra_relations_check, classify_parameters, compose_angles, expected_survivors,
    homology_compose, operad, presentation_check,
)
from .core import ArcFamily, projectivize
from .generate import BoundsError, random_family
from .glue import GlueError, compose_projective, compose_weighted, relaxed_compose
from .laws import SUITES, run_suite
from .loop import ConfigurationError, loop_of, section_of
from .render import MODELS, RenderError, RenderSpec, render
from .twisted import TwistedElement, compose_twisted


class UsageError(Exception):
    pass


def jsonable(x):
    if isinstance(x, Fraction):
        return io.qstr(x)
    if isinstance(x, (ArcFamily, ExtClass, TwistedElement)):
        return io.to_doc(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = [jsonable(v) for v in x]
        return sorted(items, key=io.dumps) if isinstance(x, (set, frozenset)) else items
    return x


def emit(doc):
    sys.stdout.write(io.dumps(jsonable(doc)) + "\n")


def _rational(s):
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational: %r" % s) from None


def _rationals(s):
    return tuple(_rational(t) for t in s.split(",") if t.strip()) if s.strip() else ()


def _bits(s):
    s = s.replace(",", "")
    if not s or set(s) - {"0", "1"}:
        raise argparse.ArgumentTypeError("expected a 0/1 vector such as 101")
    return ExtClass.basis([int(c) for c in s])


def _load(path, expect=None):
    try:
        return io.load(path, expect)
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from None


# ---------------------------------------------------------------------------
# commands

def cmd_validate(args):
    doc = _load(args.file)
    emit({"valid": True, "type": io.to_doc(doc)["type"]})
    return 0


def cmd_compose(args):
    a, b = _load(args.a, ("family", "twisted")), _load(args.b, ("family", "twisted"))
    if isinstance(a, TwistedElement) != isinstance(b, TwistedElement):
        raise UsageError("compose needs two families or two twisted elements")
    if not 1 <= args.i <= a.arity:
        raise UsageError("-i must lie in 1..%d" % a.arity)
    if isinstance(a, TwistedElement):
        emit(compose_twisted(a, args.i, b, args.lam))
        return 0
    off = args.offset
    if not 0 <= off < 1:
        raise UsageError("--offset is a fraction of the glued circle in [0, 1)")
    if args.mode == "weighted":
        out = compose_weighted(a, args.i, b, off)
    elif args.mode == "relaxed":
        out = relaxed_compose(projectivize(a), args.i, projectivize(b), off)
    else:
        out = compose_projective(a, args.i, b, off)
    emit(out)
    return 0


def cmd_laws(args):
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    res = run_suite(args.suite, args.trials, args.seed)
    fails = res["failures"]
    emit({"suite": args.suite, "trials": args.trials, "seed": args.seed, "failures": len(fails),
          "passed": not fails, "first_failure": fails[0] if fails else None})
    return 1 if fails else 0


def cmd_frame(args):
    emit(frame(_load(args.cactus, "cactus")))
    return 0


def cmd_loop(args):
    emit(io.configuration_doc(loop_of(_load(args.family, "family"))))
    return 0


def cmd_section(args):
    emit(section_of(_load(args.config, "configuration")))
    return 0


def cmd_bv_check(args):
    rep = check_face_contracts(args.identity)
    emit({"identities": rep, "passed": all(r["passed"] for r in rep.values())})
    return 0 if all(r["passed"] for r in rep.values()) else 1


def _family_name(params):
    a, b, c, e = params
    if params == (0, 0, 0, 0):
        return "Q"
    if params == (1, 0, 0, 1):
        return "bi"
    if (a, c, e) == (1, 0, 0):
        return "rd(lambda)"
    return "other"


def cmd_circles(args):
    if args.what == "compose":
        op = operad(args.operad)
        emit({"operad": op.name, "result": compose_angles(op, args.x, args.i, args.y)})
        return 0
    if args.what == "homology":
        op = operad(args.operad)
        out = homology_compose(op, args.x, args.i, args.y)
        emit({"operad": op.name, "result": out, "text": str(out)})
        return 0
    if args.what == "classify":
        if args.grid < 2:
            raise UsageError("--grid must be at least 2")
        surv, counter = classify_parameters(args.grid, args.trials, args.seed)
        expected = expected_survivors(args.grid)
        families = sorted({_family_name(p) for p in surv})
        emit({"grid": args.grid, "survivors": sorted(surv), "families": families,
              "excluded": len(counter), "matches_classification": surv == expected,
              "counterexamples_stored": set(_grid4(args.grid)) - surv <= set(counter),
              "counterexamples": {",".join(map(io.qstr, p)): ce for p, ce in counter.items()}})
        return 0 if surv == expected else 1
    if args.what == "presentation":
        rep = presentation_check(args.presentation)
        emit(rep)
        return 0 if rep["passed"] else 1
    if args.what == "relations":
        rep = algebra_relations_check(args.operad)
        emit({"operad": args.operad, "relations": {k: {"ok": v[0], "lhs": v[1], "rhs": v[2]} for k, v in rep.items()},
              "passed": all(v[0] for v in rep.values())})
        return 0 if all(v[0] for v in rep.values()) else 1
    raise UsageError("unknown circles command")


def _grid4(D):
    grid = sorted({Fraction(k, D) for k in range(D)} | {Fraction(1)})
    return [(a, b, c, e) for a in grid for b in grid for c in grid for e in grid]


def cmd_render(args):
    x = _load(args.file, ("family", "cactus", "configuration"))
    svg = render(x, RenderSpec(args.model, args.size, not args.no_labels))
    with open(args.output, "wb") as fh:
        fh.write(svg)
    emit({"model": args.model, "output": args.output, "bytes": len(svg)})
    return 0


def cmd_random(args):
    try:
        bounds = json.loads(args.bounds) if args.bounds else None
    except json.JSONDecodeError as exc:
        raise UsageError("--bounds is not JSON: %s" % exc) from None
    if bounds is not None and not isinstance(bounds, dict):
        raise UsageError("--bounds must be a JSON object")
    emit(random_family(args.seed, bounds))
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="arcop", description="Arc family operads: compose, check, draw.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="decode and validate a document")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("compose", help="compose two families (or twisted elements) at boundary i")
    s.add_argument("-i", type=int, required=True)
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--offset", type=_rational, default=Fraction(0), help="gluing offset as a fraction p/q")
    s.add_argument("--lam", type=_rational, default=Fraction(1), help="angle convention for twisted inputs")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--weighted", dest="mode", action="store_const", const="weighted")
    g.add_argument("--projective", dest="mode", action="store_const", const="projective")
    g.add_argument("--relaxed", dest="mode", action="store_const", const="relaxed")
    s.set_defaults(func=cmd_compose, mode="projective")

    s = sub.add_parser("laws", help="run a seeded operad law suite")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--suite", choices=sorted(SUITES), default="arc")
    s.set_defaults(func=cmd_laws)

    s = sub.add_parser("frame", help="arc family of a cactus")
    s.add_argument("cactus")
    s.set_defaults(func=cmd_frame)

    s = sub.add_parser("loop", help="circle configuration of an exhaustive family")
    s.add_argument("family")
    s.set_defaults(func=cmd_loop)

    s = sub.add_parser("section", help="planar family realizing a configuration")
    s.add_argument("config")
    s.set_defaults(func=cmd_section)

    s = sub.add_parser("bv-check", help="check the chain level identities")
    s.add_argument("--identity", choices=("i", "ii", "iii", "iv", "v", "all"), default="all")
    s.set_defaults(func=cmd_bv_check)

    s = sub.add_parser("circles", help="operads built from circle angles")
    cs = s.add_subparsers(dest="what", required=True)
    c = cs.add_parser("compose", help="compose angle tuples")
    c.add_argument("--operad", default="bi")
    c.add_argument("x", type=_rationals)
    c.add_argument("-i", type=int, required=True)
    c.add_argument("y", type=_rationals)
    c = cs.add_parser("homology", help="compose basis classes, given as 0/1 vectors")
    c.add_argument("--operad", default="bi")
    c.add_argument("x", type=_bits)
    c.add_argument("-i", type=int, required=True)
    c.add_argument("y", type=_bits)
    c = cs.add_parser("classify", help="grid search over local linear compositions")
    c.add_argument("--grid", type=int, default=2)
    c.add_argument("--trials", type=int, default=60)
    c.add_argument("--seed", type=int, default=0)
    c = cs.add_parser("presentation", help="check the generators-and-relations presentation")
    c.add_argument("--presentation", choices=("bi", "d"), default="bi")
    c = cs.add_parser("relations", help="check the algebra relations of one operad")
    c.add_argument("--operad", default="bi")
    s.set_defaults(func=cmd_circles)

    s = sub.add_parser("render", help="draw a family, cactus or configuration as SVG")
    s.add_argument("file")
    s.add_argument("--model", choices=MODELS, default="interval")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--size", type=int, default=480)
    s.add_argument("--no-labels", action="store_true")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("random", help="seeded random valid family")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bounds", default=None, help='JSON object, e.g. {"genus": 0, "boundaries": 3}')
    s.set_defaults(func=cmd_random)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write("arcop: error: %s\n" % exc)
        return 2
    except io.DocumentError as exc:
        emit({"valid": False, "path": exc.path, "error": str(exc)})
        return 1
    except (GlueError, ConfigurationError, RenderError, BoundsError, ValueError) as exc:
        emit({"error": str(exc), "kind": type(exc).__name__})
        return 1


if __name__ == "__main__":
    sys.exit(main())
