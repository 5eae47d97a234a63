"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 malformed matrix or
determinant != 1 (argparse usage errors also exit 2), 3 the matrix's
classification precludes the requested operation (for example solving a
trivial action, or asking for the axis of a periodic class), 4 I/O failure.

All numeric output is exact: integers, 'p/q' slope strings and
'(a+b√d)/c' strings for the quadratic irrationals.  Floating point
appears only inside rendered SVG coordinates.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import Slope, intersection_number
from .mapclass import MappingClass, Periodic, Reducible, TrivialAction
from .knots import NonFibredDoubled, monodromy, parse_knot, unknotting_crossing_change_count
from .oracle import agree, brute_force
from .render import render_svg
from .solver import SolutionSet, solve
from .sweep import run_verification

__all__ = ["main", "entry", "build_parser"]

_SIDE_NAMES = {None: None, -1: "negative", 1: "positive"}


class _InputError(Exception):
    """Malformed matrix, slope or knot name on the command line."""


def _parse_matrix(text: str) -> MappingClass:
    try:
        return MappingClass.parse(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc


def _parse_slope(text: str) -> Slope:
    try:
        return Slope.parse(text)
    except ValueError as exc:
        raise _InputError(f"malformed slope {text!r}") from exc


def _parse_knot(name: str):
    try:
        return parse_knot(name)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc


def dump_json(obj) -> str:
    """Stable serialization: insertion order, UTF-8, no ASCII escapes."""
    return json.dumps(obj, ensure_ascii=False)


def _classification_dict(cls) -> dict:
    if isinstance(cls, TrivialAction):
        return {"kind": "trivial"}
    if isinstance(cls, Periodic):
        return {"kind": "periodic", "psl_order": cls.psl_order}
    if isinstance(cls, Reducible):
        return {
            "kind": "reducible",
            "n": cls.n,
            "fixed_slope": str(cls.fixed_slope),
            "conjugator": str(cls.conjugator),
        }
    return {
        "kind": "pseudo_anosov",
        "repelling": str(cls.repelling),
        "attracting": str(cls.attracting),
    }


def _classification_lines(cls) -> list[str]:
    if isinstance(cls, TrivialAction):
        return ["classification: trivial action (plus or minus the identity)"]
    if isinstance(cls, Periodic):
        return [f"classification: periodic (order {cls.psl_order} in PSL(2,Z))"]
    if isinstance(cls, Reducible):
        return [
            "classification: reducible",
            f"  fixed slope: {cls.fixed_slope}",
            f"  translation amount: {cls.n}",
            f"  conjugator: {cls.conjugator}",
        ]
    return [
        "classification: pseudo-Anosov",
        f"  repelling fixed point: {cls.repelling}",
        f"  attracting fixed point: {cls.attracting}",
    ]


def _classes_list(result: SolutionSet) -> list[dict]:
    return [
        {
            "representative": str(c.representative),
            "members": [str(v) for v in c.members],
            "side": _SIDE_NAMES[c.side],
            "provenance": c.provenance.value,
        }
        for c in result.classes
    ]


def _axis_dict(ax) -> dict:
    return {
        "period": ax.period,
        "edges": [[str(e.low), str(e.high)] for e in ax.edges],
        "repelling": str(ax.repelling),
        "attracting": str(ax.attracting),
        "side_form": list(ax.side_form),
    }


def _print_classes(result: SolutionSet) -> None:
    print(f"classes: {len(result.classes)}")
    for i, c in enumerate(result.classes, 1):
        side = f", side {_SIDE_NAMES[c.side]}" if c.side is not None else ""
        members = ", ".join(str(v) for v in c.members)
        print(f"  [{i}] representative {c.representative}{side} ({c.provenance.value}): {members}")
    print(f"class bound: {'ok' if result.bound_ok else 'VIOLATED'}")


def _cmd_classify(args) -> int:
    m = _parse_matrix(args.matrix)
    cls = m.classify()
    if args.json:
        print(dump_json({"command": "classify", "matrix": str(m), "classification": _classification_dict(cls)}))
    else:
        print(f"matrix: {m} (psl representative {m.psl_rep})")
        for line in _classification_lines(cls):
            print(line)
    return 0


def _cmd_solve(args) -> int:
    m = _parse_matrix(args.matrix)
    result = solve(m)
    if args.json:
        print(dump_json({
            "command": "solve",
            "matrix": str(m),
            "classification": _classification_dict(result.classification),
            "classes": _classes_list(result),
            "theorem_ok": result.bound_ok,
        }))
    else:
        print(f"matrix: {m}")
        for line in _classification_lines(result.classification):
            print(line)
        _print_classes(result)
    return 0


def _cmd_axis(args) -> int:
    m = _parse_matrix(args.matrix)
    ax = m.axis()
    if args.json:
        print(dump_json({
            "command": "axis",
            "matrix": str(m),
            "classification": _classification_dict(m.classify()),
            "axis": _axis_dict(ax),
        }))
    else:
        s2, s1, s0 = ax.side_form
        print(f"matrix: {m}")
        print(f"axis period: {ax.period}")
        print(f"repelling endpoint: {ax.repelling}")
        print(f"attracting endpoint: {ax.attracting}")
        print(f"side form: ({s2})p² + ({s1})pq + ({s0})q²")
        for i, e in enumerate(ax.edges):
            print(f"  e{i}: {e}")
    return 0


def _cmd_orbit(args) -> int:
    m = _parse_matrix(args.matrix)
    s = _parse_slope(args.slope)
    rows = []
    minv = m.inverse()
    back = s
    for n in range(1, args.iters + 1):
        back = minv.act(back)
        rows.append((-n, back))
    rows.reverse()
    fwd = s
    rows.append((0, s))
    for n in range(1, args.iters + 1):
        fwd = m.act(fwd)
        rows.append((n, fwd))
    if args.json:
        print(dump_json({
            "command": "orbit",
            "matrix": str(m),
            "slope": str(s),
            "orbit": [
                {"n": n, "slope": str(v), "intersection_with_image": intersection_number(v, m.act(v))}
                for n, v in rows
            ],
        }))
    else:
        print(f"orbit of {s} under {m}:")
        for n, v in rows:
            i = intersection_number(v, m.act(v))
            marker = "  <- solution" if i <= 1 else ""
            print(f"  n={n:+d}: {v} (intersection with image: {i}){marker}")
    return 0


def _cmd_oracle(args) -> int:
    m = _parse_matrix(args.matrix)
    result = brute_force(m, args.bound, args.iters)
    solver_result = solve(m)
    ok = agree(solver_result, result)
    if args.json:
        print(dump_json({
            "command": "oracle",
            "matrix": str(m),
            "bound": result.bound,
            "iteration_cap": result.iteration_cap,
            "solutions": [str(s) for s in result.solutions],
            "groups": [[str(s) for s in g] for g in result.groups],
            "solver_classes": len(solver_result.classes),
            "agree": ok,
        }))
    else:
        print(f"matrix: {m} (bound {result.bound}, iteration cap {result.iteration_cap})")
        print(f"solutions found: {len(result.solutions)}")
        for i, g in enumerate(result.groups, 1):
            print(f"  group {i}: {', '.join(str(s) for s in g)}")
        print(f"solver classes: {len(solver_result.classes)}")
        print(f"agreement: {'yes' if ok else 'NO'}")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    lines: list[str] = []

    def on_result(i, m, rep, oracle_ok):
        if args.json:
            lines.append(dump_json({
                "index": i,
                "matrix": str(m),
                "classification": _classification_dict(rep.classification)["kind"],
                "classes": rep.class_count,
                "theorem_ok": rep.bound_ok,
                "oracle_ok": oracle_ok,
            }))

    report = run_verification(
        count=args.count,
        word_length=args.word_length,
        seed=args.seed,
        bound=args.bound,
        iteration_cap=args.iters,
        on_result=on_result,
    )
    passed = args.count - len(report.bound_failures)
    if args.json:
        lines.append(dump_json({
            "command": "verify",
            "count": args.count,
            "seed": args.seed,
            "word_length": args.word_length,
            "bound_failures": len(report.bound_failures),
            "oracle_checks": report.oracle_checks,
            "oracle_failures": len(report.oracle_failures),
            "pass": report.ok,
        }))
        text = "\n".join(lines) + "\n"
    else:
        out = [
            f"verified {args.count} matrices (seed {args.seed}, words of length <= {args.word_length})",
            f"class-bound failures: {len(report.bound_failures)}",
            f"oracle agreement checks: {report.oracle_checks}, failures: {len(report.oracle_failures)}",
        ]
        for m in report.bound_failures:
            out.append(f"  bound violation: {m}")
        for m in report.oracle_failures:
            out.append(f"  oracle disagreement: {m}")
        out.append(f"{passed}/{args.count} pass")
        text = "\n".join(out) + "\n"
    if args.out:
        _write_file(args.out, text)
    else:
        sys.stdout.write(text)
    return 0 if report.ok else 1


def _cmd_knot(args) -> int:
    knot = _parse_knot(args.name)
    count = unknotting_crossing_change_count(knot)
    if isinstance(knot, NonFibredDoubled):
        if args.json:
            print(dump_json({
                "command": "knot",
                "knot": args.name,
                "fibred": False,
                "unknotting_crossing_changes": count,
            }))
        else:
            print(f"{args.name}: non-fibred doubled knot")
            print(f"unknotting crossing changes: {count}")
        return 0
    m = monodromy(knot)
    result = solve(m)
    if args.json:
        print(dump_json({
            "command": "knot",
            "knot": args.name,
            "fibred": True,
            "matrix": str(m),
            "classification": _classification_dict(result.classification),
            "classes": _classes_list(result),
            "theorem_ok": result.bound_ok,
            "unknotting_crossing_changes": count,
        }))
    else:
        print(f"{args.name}: fibred, monodromy {m}")
        for line in _classification_lines(result.classification):
            print(line)
        _print_classes(result)
        print(f"unknotting crossing changes: {count}")
    return 0


def _cmd_render(args) -> int:
    m = _parse_matrix(args.matrix)
    svg = render_svg(m, display_bound=args.bound)
    if args.out:
        _write_file(args.out, svg + "\n")
    else:
        sys.stdout.write(svg + "\n")
    return 0


def _write_file(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _add_matrix(p: argparse.ArgumentParser) -> None:
    p.add_argument("-m", "--matrix", required=True, help="matrix 'a,b;c,d' (row-major)")


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit one JSON object (per line in sweep mode)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fareyarc",
        description="Classify SL(2,Z) mapping classes of the once-punctured torus "
        "and enumerate arc classes with disjoint image.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classification of a matrix")
    _add_matrix(p)
    _add_json(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("solve", help="h-equivalence classes of slopes with disjoint image")
    _add_matrix(p)
    _add_json(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("axis", help="fundamental period of a pseudo-Anosov axis")
    _add_matrix(p)
    _add_json(p)
    p.set_defaults(func=_cmd_axis)

    p = sub.add_parser("orbit", help="orbit of a slope under the action")
    _add_matrix(p)
    p.add_argument("-s", "--slope", required=True, help="slope 'p/q' or 'inf'")
    p.add_argument("--iters", type=int, default=16, help="iterations in each direction")
    _add_json(p)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("oracle", help="brute-force scan and solver comparison")
    _add_matrix(p)
    p.add_argument("--bound", type=int, default=50, help="slope universe bound")
    p.add_argument("--iters", type=int, default=16, help="orbit-matching iteration cap")
    _add_json(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("verify", help="random sweep checking the class-count bound")
    p.add_argument("--count", type=int, default=10000, help="number of random matrices")
    p.add_argument("--word-length", type=int, default=20, help="maximum generator-word length")
    p.add_argument("--seed", type=int, default=0, help="random seed")
    p.add_argument("--bound", type=int, default=50, help="oracle slope universe bound")
    p.add_argument("--iters", type=int, default=16, help="oracle iteration cap")
    p.add_argument("--out", help="write the report to a file")
    _add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("knot", help="unknotting crossing changes of a genus-one knot")
    p.add_argument("name", help="trefoil, figure8, or doubled:<label>")
    _add_json(p)
    p.set_defaults(func=_cmd_knot)

    p = sub.add_parser("render", help="SVG of the tessellation with invariants highlighted")
    _add_matrix(p)
    p.add_argument("--bound", type=int, default=12, help="display bound for tessellation edges")
    p.add_argument("--out", help="write the SVG to a file")
    p.set_defaults(func=_cmd_render)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        # classification precludes the requested operation
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
