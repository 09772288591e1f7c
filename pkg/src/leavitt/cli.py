"""Command-line front end.

Every subcommand reads a digraph JSON file (where applicable), runs the
corresponding library operation and prints either a human-readable report or,
with --json, a stable JSON document {"command", "digraph", "result"}.
Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import dimfun, quotient, repbuild
from .algebra import LeavittAlgebra
from .digraph import Cycle, Digraph, Path
from .errors import DomainError, LeavittError
from .repbuild import QuiverRep


def _load_digraph(path: str) -> Digraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise DomainError(f"cannot read {path}: {e}") from None
    return Digraph.from_json(text)


def _digraph_summary(g: Digraph) -> dict:
    return {
        "vertices": len(g.vertices),
        "arrows": len(g.arrows),
        "separated": g.is_separated,
    }


def _path_dict(p: Path) -> dict:
    return {"start": p.start, "arrows": list(p.arrows)}


def _cycle_dict(c: Cycle) -> dict:
    return {"anchor": c.anchor, "arrows": list(c.arrows)}


def _parse_assignments(text: str, what: str) -> dict[str, int]:
    out = {}
    for chunk in text.split(","):
        if "=" not in chunk:
            raise DomainError(f"bad {what} entry {chunk!r}, expected key=value")
        k, v = chunk.split("=", 1)
        try:
            out[k.strip()] = int(v)
        except ValueError:
            raise DomainError(f"bad {what} value {v!r}") from None
    return out


def _find_cycle(g: Digraph, anchor: str) -> Cycle:
    matches = [c for c in g.cycles() if c.anchor == anchor]
    if not matches:
        raise DomainError(f"no cycle anchored at {anchor!r}")
    if len(matches) > 1:
        raise DomainError(f"several cycles anchored at {anchor!r}; the choice is ambiguous")
    return matches[0]


# -- subcommand handlers: each returns (result payload, human lines) ----------


def _cmd_analyze(g: Digraph, args):
    cycles = g.cycles()
    maximal = g.maximal_sinks_and_cycles()
    result = {
        "sinks": sorted(g.sinks()),
        "cycles": [_cycle_dict(c) for c in cycles],
        "maximal": [
            {"kind": m.kind, "anchor": m.anchor_vertex, "predecessor_count": m.predecessor_count}
            for m in maximal
        ],
        "classification": None,
    }
    lines = [
        f"sinks: {', '.join(sorted(g.sinks())) or '(none)'}",
        f"cycles: {', '.join('(' + ' '.join(c.arrows) + ')' for c in cycles) or '(none)'}",
        "maximal sinks/cycles: "
        + (", ".join(f"{m.kind} at {m.anchor_vertex} ({m.predecessor_count} predecessors)" for m in maximal) or "(none)"),
    ]
    if g.is_separated:
        lines.append("classification skipped: digraph is separated")
    else:
        cls = quotient.classify_algebra(g)
        result["classification"] = cls.to_dict()
        lines += [f"{k}: {v}" for k, v in cls.to_dict().items()]
    return result, lines


def _cmd_dimfun(g: Digraph, args):
    rm = dimfun.relation_matrix(g)
    result = {
        "vertices": list(rm.vertices),
        "rows": [list(r) for r in rm.rows],
        "has_nonzero_dimfun": dimfun.has_nonzero_dimfun(g),
    }
    lines = [f"relation rows over {list(rm.vertices)}:"]
    lines += [f"  {list(r)}" for r in rm.rows]
    lines.append(f"nonzero dimension function exists: {result['has_nonzero_dimfun']}")
    if args.dim:
        d = _parse_assignments(args.dim, "--dim")
        ok = dimfun.verify(g, d)
        result["dimension_function"] = d
        result["verifies"] = ok
        lines.append(f"{d} verifies: {ok}")
    return result, lines


def _cmd_hilbert(g: Digraph, args):
    hb = dimfun.hilbert_basis(g, args.bound)
    result = {
        "bound": args.bound,
        "complete": hb.complete,
        "basis": [dict(f) for f in hb.functions],
    }
    lines = [f"minimal nonzero solutions with entries <= {args.bound} "
             f"({'complete' if hb.complete else 'bound-truncated'}):"]
    lines += [f"  {dict(f)}" for f in hb.functions] or ["  (none)"]
    return result, lines


def _cmd_ibn(g: Digraph, args):
    ok = dimfun.ibn_check(g)
    return {"ibn": ok}, [f"invariant basis number: {ok}"]


def _cmd_build_rep(g: Digraph, args):
    d = _parse_assignments(args.dim, "--dim")
    rep = repbuild.build_rep(g, d, seed=args.seed)
    report = repbuild.verify_relations(g, rep)
    result = rep.to_dict()
    result["verified"] = report.passed
    lines = [f"dims: {rep.dims}", f"relations verified: {report.passed}"]
    return result, lines


def _cmd_verify_rep(g: Digraph, args):
    try:
        with open(args.rep, encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise DomainError(f"cannot read representation {args.rep}: {e}") from None
    rep = QuiverRep.from_dict(g, data)
    report = repbuild.verify_relations(g, rep)
    result = {
        "passed": report.passed,
        "checks": [
            {"relation": c.relation, "instance": c.instance, "ok": c.ok} for c in report.checks
        ],
    }
    lines = [f"{c.relation:5} {c.instance}: {'ok' if c.ok else 'FAIL'}" for c in report.checks]
    lines.append(f"overall: {'pass' if report.passed else 'fail'}")
    return result, lines


def _cmd_sink_module(g: Digraph, args):
    sm = repbuild.SinkModule(g, args.sink)
    report = repbuild.verify_relations(g, sm.rep)
    result = {
        "sink": args.sink,
        "dims": dict(sm.rep.dims),
        "basis": [_path_dict(p) for p in sm.basis],
        "relations_pass": report.passed,
    }
    lines = [
        f"paths ending at {args.sink}: {len(sm.basis)}",
        f"dims: {sm.rep.dims}",
        f"relations verified: {report.passed}",
    ]
    return result, lines


def _cmd_chen(g: Digraph, args):
    c = _find_cycle(g, args.cycle)
    cm = repbuild.ChenModule(g, c)
    toks = cm.tokens()
    report = cm.check_relations()
    result = {
        "cycle": _cycle_dict(c),
        "tokens": [_path_dict(t) for t in toks],
        "count": len(toks),
        "relations_pass": report.passed,
    }
    lines = [
        f"cycle ({' '.join(c.arrows)}) anchored at {c.anchor}",
        f"tokens ({len(toks)}): "
        + ", ".join("(" + " ".join(t.arrows) + ")" if t.arrows else t.start for t in toks),
        f"relations verified on tokens: {report.passed}",
    ]
    return result, lines


def _cmd_quotients(g: Digraph, args):
    shape = quotient.classify_quotients(g)
    result = shape.to_dict()
    if shape.summands:
        lines = [
            f"M_{s.n} over "
            + ("the ground field" if s.kind == "sink" else "F[x]/(P), P(0)=1 nonconstant")
            + f" (anchor {s.anchor_vertex})"
            for s in shape.summands
        ]
    else:
        lines = ["no nonzero finite dimensional quotient"]
    return result, lines


def _cmd_instantiate(g: Digraph, args):
    shape = quotient.classify_quotients(g)
    polys = {}
    for poly_text in args.poly or []:
        if "=" not in poly_text:
            raise DomainError(f"bad --poly {poly_text!r}, expected anchor=c0,c1,...")
        anchor, coeffs = poly_text.split("=", 1)
        try:
            polys[anchor.strip()] = [Fraction(c) for c in coeffs.split(",")]
        except ValueError:
            raise DomainError(f"bad coefficients in --poly {poly_text!r}") from None
    inst = quotient.instantiate(shape, polys)
    result = {
        "summands": [
            dict(s.to_dict(), poly=[str(c) for c in inst.polys.get(s.anchor_vertex, ())])
            for s in shape.summands
        ],
        "total_dim": inst.total_dim,
    }
    lines = [f"total dimension: {inst.total_dim}"]
    return result, lines


def _cmd_ideals(g: Digraph, args):
    ideals = quotient.graded_ideals(g)
    result = {"ideals": [list(h) for h in ideals]}
    lines = [f"hereditary saturated subsets ({len(ideals)}):"]
    lines += ["  {" + ", ".join(h) + "}" for h in ideals]
    return result, lines


def _cmd_eval(g: Digraph, args):
    alg = LeavittAlgebra(g)
    x = alg.parse(args.expr)
    grade = x.grade()
    result = {
        "input": args.expr,
        "normal_form": str(x),
        "is_zero": x.is_zero(),
        "grade": (
            {"degree": grade.degree, "word": [[a, s] for a, s in grade.word]}
            if grade is not None
            else "inhomogeneous"
        ),
    }
    lines = [f"normal form: {x}"]
    if grade is None:
        lines.append("grade: inhomogeneous")
    else:
        word = " ".join(a if s > 0 else f"{a}^-1" for a, s in grade.word) or "1"
        lines.append(f"grade: z = {grade.degree}, word = {word}")
    return result, lines


def _operator_result(checks):
    return {
        "checks": [{"name": c.name, "window": c.window, "ok": c.ok} for c in checks],
        "all_ok": all(c.ok for c in checks),
    }


def _cmd_updown(args):
    model = repbuild.updown_model(args.n, args.window)
    checks = model.check_relations()
    result = dict(_operator_result(checks), n=args.n, window=args.window)
    lines = [f"{c.name} (window {c.window}): {'ok' if c.ok else 'FAIL'}" for c in checks]
    return result, lines


def _cmd_toeplitz(args):
    model = repbuild.toeplitz_model(args.window)
    checks = model.check_relations()
    result = dict(_operator_result(checks), window=args.window)
    lines = [f"{c.name} (window {c.window}): {'ok' if c.ok else 'FAIL'}" for c in checks]
    return result, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="leavitt", description="Computations with Leavitt path algebras of finite digraphs"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, needs_file=True, **extra):
        p = sub.add_parser(name)
        if needs_file:
            p.add_argument("file", help="digraph JSON file")
        p.add_argument("--json", action="store_true", help="emit the JSON report")
        return p

    add("analyze")
    p = add("dimfun")
    p.add_argument("--dim", help="dimension function, e.g. v=1,w=0")
    p = add("hilbert")
    p.add_argument("--bound", type=int, default=10, help="entry bound for the completion")
    add("ibn")
    p = add("build-rep")
    p.add_argument("--dim", required=True, help="dimension function, e.g. v=2,w=1")
    p.add_argument("--seed", type=int, default=None,
                   help="use a seeded random block isomorphism instead of the identity")
    p = add("verify-rep")
    p.add_argument("rep", help="representation JSON file")
    p = add("sink-module")
    p.add_argument("--sink", required=True)
    p = add("chen")
    p.add_argument("--cycle", required=True, metavar="ANCHOR")
    add("quotients")
    p = add("instantiate")
    p.add_argument("--poly", action="append", metavar="ANCHOR=C0,C1,...",
                   help="constant-first polynomial for a cycle anchor")
    add("ideals")
    p = add("eval")
    p.add_argument("expr", help="algebra expression, e.g. 'v - e e^'")
    p = add("updown", needs_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--window", type=int, default=256)
    p = add("toeplitz", needs_file=False)
    p.add_argument("--window", type=int, default=256)
    return parser


_HANDLERS = {
    "analyze": _cmd_analyze,
    "dimfun": _cmd_dimfun,
    "hilbert": _cmd_hilbert,
    "ibn": _cmd_ibn,
    "build-rep": _cmd_build_rep,
    "verify-rep": _cmd_verify_rep,
    "sink-module": _cmd_sink_module,
    "chen": _cmd_chen,
    "quotients": _cmd_quotients,
    "instantiate": _cmd_instantiate,
    "ideals": _cmd_ideals,
    "eval": _cmd_eval,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "updown":
            result, lines = _cmd_updown(args)
            summary = None
        elif args.command == "toeplitz":
            result, lines = _cmd_toeplitz(args)
            summary = None
        else:
            g = _load_digraph(args.file)
            result, lines = _HANDLERS[args.command](g, args)
            summary = _digraph_summary(g)
    except LeavittError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    if args.json:
        report = {"command": args.command, "digraph": summary, "result": result}
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)
    return 0


def entry():  # console-script wrapper
    sys.exit(main())


if __name__ == "__main__":
    entry()
