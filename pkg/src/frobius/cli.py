"""Command-line front end.

Subcommands:

* ``check TERM``            parse and type a term
* ``normalize TERM``        print the canonical form
* ``eq TERM TERM``          decide equality
* ``skeleton TERM``         print the topological skeleton
* ``onecob-compose G F``    glue two diagrams (F applied first, like ``g . f``)
* ``brauer --p P --diagram D``   the exact matrix of a diagram
* ``eval --algebra FILE --term TERM``  TQFT evaluation
* ``fuzz --seed N --count N``          seeded property sweeps

Pass ``-`` as a term to read it from stdin.  ``--format json`` emits the
documented schemas; text output is byte-stable for fixed inputs and seed.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import __version__
from .brauer import DEFAULT_SIZE_GUARD, brauer_b, kron, mat_eq, mat_mul, matrix_a
from .errors import FrobiusError
from .normalize import (
    NormalForm,
    equal,
    expand_to_term,
    normalize,
    validate_normal_form,
)
from .onecob import compose_diagram, parse_diagram, print_diagram, tensor_diagram
from .sampling import (
    random_composable_diagrams,
    random_composable_terms,
    random_term,
)
from .skeleton import (
    cob_skeleton,
    compose_skeleton,
    euler_characteristic,
    normal_of_skeleton,
    skeleton_to_json_dict,
    tensor_skeleton,
)
from .terms import Comp, Tensor, parse_term, print_term, typecheck
from .tqft import (
    algebra_from_json_dict,
    diagonal_algebra,
    eval_normal,
    eval_term,
)

__all__ = ["main"]


def _read_arg(s: str) -> str:
    return sys.stdin.read() if s == "-" else s


def _emit(payload: dict, lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _fmt_frac(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _normal_lines(nf: NormalForm) -> list[str]:
    return [
        f"type: {nf.n_in} -> {nf.n_out}",
        f"closed: {list(nf.closed)}",
        f"input-only: {[list(b) for b in nf.input_only]}",
        f"output-only: {[list(b) for b in nf.output_only]}",
        f"mixed: {[list(b) for b in nf.mixed]}",
        f"head: {list(nf.head)}",
        f"tail: {list(nf.tail)}",
        f"term: {print_term(expand_to_term(nf))}",
    ]


def _cmd_check(args) -> int:
    t = parse_term(_read_arg(args.term))
    tt = typecheck(t)
    _emit(
        {"source": tt.source, "target": tt.target},
        [f"{tt.source} -> {tt.target}"],
        args.format,
    )
    return 0


def _cmd_normalize(args) -> int:
    t = parse_term(_read_arg(args.term))
    nf = normalize(t)
    _emit(nf.to_json_dict(), _normal_lines(nf), args.format)
    return 0


def _cmd_eq(args) -> int:
    f = parse_term(_read_arg(args.left))
    g = parse_term(_read_arg(args.right))
    tf, tg = typecheck(f), typecheck(g)
    note = None
    if tf != tg:
        result = False
        note = f"types differ: {tf} vs {tg}"
    else:
        result = equal(f, g)
    payload: dict = {"equal": result}
    lines = ["equal" if result else "not equal"]
    if note:
        payload["note"] = note
        lines.append(note)
    _emit(payload, lines, args.format)
    return 0


def _cmd_skeleton(args) -> int:
    t = parse_term(_read_arg(args.term))
    s = cob_skeleton(t)
    d = skeleton_to_json_dict(s)
    lines = [
        f"type: {s.n_in} -> {s.n_out}",
        f"components: {[[c['in'], c['out'], c['genus']] for c in d['components']]}",
        f"closed: {d['closed']}",
    ]
    _emit(d, lines, args.format)
    return 0


def _diagram_json(d) -> dict:
    pairs = sorted(tuple(sorted(p)) for p in d.matching)
    return {
        "inSigns": d.in_signs,
        "outSigns": d.out_signs,
        "matching": [[[s, k] for s, k in pair] for pair in pairs],
        "circles": d.circles,
    }


def _cmd_onecob_compose(args) -> int:
    g = parse_diagram(_read_arg(args.g))
    f = parse_diagram(_read_arg(args.f))
    out = compose_diagram(g, f)
    _emit(_diagram_json(out), [print_diagram(out)], args.format)
    return 0


def _cmd_brauer(args) -> int:
    d = parse_diagram(_read_arg(args.diagram))
    b = brauer_b(d, args.p, args.size_guard)
    payload: dict = {
        "p": args.p,
        "rows": b.rows,
        "cols": b.cols,
        "entries": b.to_rows(),
    }
    lines = [" ".join(str(x) for x in row) for row in b.to_rows()]
    if args.show_circles:
        payload["circles"] = d.circles
        lines.append(f"circles: {d.circles}")
    if args.show_a:
        a = matrix_a(d, args.p, args.size_guard)
        payload["a"] = a.to_rows()
        lines.append("a:")
        lines.extend(" ".join(str(x) for x in row) for row in a.to_rows())
    _emit(payload, lines, args.format)
    return 0


def _cmd_eval(args) -> int:
    with open(args.algebra, encoding="utf-8") as fh:
        a = algebra_from_json_dict(json.load(fh))
    t = parse_term(_read_arg(args.term))
    if args.via == "term":
        m = eval_term(t, a, args.size_guard)
        agree = None
    elif args.via == "normal":
        m = eval_normal(normalize(t), a, args.size_guard)
        agree = None
    else:
        m = eval_term(t, a, args.size_guard)
        other = eval_normal(normalize(t), a, args.size_guard)
        if not mat_eq(m, other):
            raise FrobiusError("evaluation routes disagree; please report this input")
        agree = True
    payload: dict = {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[_fmt_frac(x) for x in row] for row in m.to_rows()],
        "via": args.via,
    }
    lines = [" ".join(_fmt_frac(x) for x in row) for row in m.to_rows()]
    if agree:
        payload["agree"] = True
        lines.append("routes agree: exact")
    _emit(payload, lines, args.format)
    return 0


def _fuzz_terms(rng: random.Random, count: int) -> tuple[int, int]:
    bad = 0
    for _ in range(count):
        t = random_term(rng)
        nf = normalize(t)
        validate_normal_form(nf)
        if nf != normal_of_skeleton(cob_skeleton(t)):
            bad += 1
        elif normalize(expand_to_term(nf)) != nf:
            bad += 1
    return count, bad


def _fuzz_skeletons(rng: random.Random, count: int) -> tuple[int, int]:
    bad = 0
    for _ in range(count):
        f, g = random_composable_terms(rng, max_nodes=15)
        sf, sg = cob_skeleton(f), cob_skeleton(g)
        glued = compose_skeleton(sf, sg)
        if cob_skeleton(Comp(g, f)) != glued:
            bad += 1
            continue
        if euler_characteristic(glued) != euler_characteristic(sf) + euler_characteristic(sg):
            bad += 1
            continue
        side = tensor_skeleton(sf, sg)
        if cob_skeleton(Tensor(f, g)) != side:
            bad += 1
        elif euler_characteristic(side) != euler_characteristic(sf) + euler_characteristic(sg):
            bad += 1
    return count, bad


def _fuzz_brauer(rng: random.Random, count: int) -> tuple[int, int]:
    bad = 0
    per_p = max(1, count // 2)
    for p in (2, 3):
        for _ in range(per_p):
            f, g = random_composable_diagrams(rng)
            lhs = brauer_b(compose_diagram(g, f), p)
            rhs = mat_mul(brauer_b(g, p), brauer_b(f, p))
            if not mat_eq(lhs, rhs):
                bad += 1
                continue
            lhs = brauer_b(tensor_diagram(f, g), p)
            rhs = kron(brauer_b(f, p), brauer_b(g, p))
            if not mat_eq(lhs, rhs):
                bad += 1
    return 2 * per_p, bad


def _fuzz_tqft(rng: random.Random, count: int) -> tuple[int, int]:
    a = diagonal_algebra(2)
    bad = 0
    for _ in range(count):
        t = random_term(rng, max_nodes=20, max_width=3)
        if not mat_eq(eval_normal(normalize(t), a), eval_term(t, a)):
            bad += 1
    return count, bad


def _cmd_fuzz(args) -> int:
    rng = random.Random(args.seed)
    suites = {
        "normalize-vs-skeleton": _fuzz_terms,
        "skeleton-functoriality": _fuzz_skeletons,
        "brauer-functoriality": _fuzz_brauer,
        "tqft-agreement": _fuzz_tqft,
    }
    payload: dict = {"seed": args.seed, "suites": {}}
    lines = [f"seed: {args.seed}"]
    failures = 0
    for name, fn in suites.items():
        cases, bad = fn(rng, args.count)
        ok = bad == 0
        failures += bad
        payload["suites"][name] = {"cases": cases, "failures": bad}
        lines.append(f"{name}: {'ok' if ok else 'FAIL'} ({cases} cases)")
    _emit(payload, lines, args.format)
    return 0 if failures == 0 else 1


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--size-guard", type=int, default=DEFAULT_SIZE_GUARD)
    shared.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="frobius",
        description="Free commutative Frobenius PROP: normal forms, skeletons, "
        "diagram matrices, TQFT evaluation.",
    )
    parser.add_argument("--version", action="version", version=f"frobius {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[shared], help="parse and type a term")
    p.add_argument("term")
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("normalize", parents=[shared], help="canonical form of a term")
    p.add_argument("term")
    p.set_defaults(fn=_cmd_normalize)

    p = sub.add_parser("eq", parents=[shared], help="decide equality of two terms")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_eq)

    p = sub.add_parser("skeleton", parents=[shared], help="topological skeleton")
    p.add_argument("term")
    p.set_defaults(fn=_cmd_skeleton)

    p = sub.add_parser(
        "onecob-compose", parents=[shared], help="glue two diagrams (second first)"
    )
    p.add_argument("g")
    p.add_argument("f")
    p.set_defaults(fn=_cmd_onecob_compose)

    p = sub.add_parser("brauer", parents=[shared], help="exact matrix of a diagram")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--show-a", action="store_true")
    p.add_argument("--show-circles", action="store_true")
    p.set_defaults(fn=_cmd_brauer)

    p = sub.add_parser("eval", parents=[shared], help="evaluate a term in an algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--term", required=True)
    p.add_argument("--via", choices=("term", "normal", "both"), default="both")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("fuzz", parents=[shared], help="seeded property sweeps")
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(fn=_cmd_fuzz)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FrobiusError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
