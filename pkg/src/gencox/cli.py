"""Command-line front end.

Every subcommand prints JSON (or DOT with ``--dot``).  Exit status: 0 for
success or a positive verdict, 1 for a clean negative verdict, 2 for errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GencoxError, MalformedInputError, NotRealisableError

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_default)


def _default(x):
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"cannot serialise {type(x).__name__}")


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise MalformedInputError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path):
    from .graph.io import loads_graph
    return loads_graph(_read(path))


def _load_forms(path):
    from .geometry.arrangement import parse_forms
    return parse_forms(_read(path))


def _emit_graph(args, G, out):
    from .graph.io import graph_to_dict, to_dot
    if args.dot:
        out.write(to_dot(G))
        return
    if getattr(args, "out", None):
        Path(args.out).write_text(json.dumps(graph_to_dict(G), separators=(",", ":")) + "\n")
        out.write(_dump({"vertices": G.vertex_count, "rank": G.rank, "written": args.out}) + "\n")
    else:
        out.write(_dump(graph_to_dict(G)) + "\n")


def cmd_qn(args, out):
    from .relations import build_qn, format_word
    Q = build_qn(args.n)
    out.write(_dump({"n": args.n, "count": len(Q), "words": [format_word(w) for w in Q]}) + "\n")
    return EXIT_OK


def cmd_star(args, out):
    from .relations import build_qn, parse_generator
    Q = build_qn(args.n)
    c = Q.star(parse_generator(args.a), [parse_generator(args.b)])
    out.write(_dump({"a": args.a, "b": args.b, "result": str(c)}) + "\n")
    return EXIT_OK


def cmd_act(args, out):
    from .relations import parse_generator, perm_action
    y = perm_action(args.n, parse_generator(args.generator), args.x)
    out.write(_dump({"generator": args.generator, "x": args.x, "result": y}) + "\n")
    return EXIT_OK


def cmd_build(args, out):
    from .admissible.gamma import build_gamma
    from .admissible.shapes import parse_shape
    A = build_gamma(parse_shape(args.shape, args.n), args.cap)
    if not A.complete:
        out.write(_dump({"complete": False, "vertices": A.vertex_count,
                         "spheres": A.spheres}) + "\n")
        return EXIT_NEGATIVE
    _emit_graph(args, A.graph, out)
    return EXIT_OK


def _sequence_json(G, seq):
    return {
        "colours": [G.colours[seq.pair[0]], G.colours[seq.pair[1]]],
        "extra": G.colours[seq.extra],
        "residue": sorted(seq.residue.vertices),
        "sequence": list(seq.entries),
    }


def cmd_check(args, out):
    from .graph.core import validate_graph
    from .graph.sequences import check_realisable_233
    G = _load_graph(args.graph)
    problems = validate_graph(G)
    if problems:
        out.write(_dump({"valid": False, "realisable": False, "axiom_violations": [
            {"axiom": p.axiom, "witness": list(p.witness), "detail": p.detail}
            for p in problems]}) + "\n")
        return EXIT_NEGATIVE
    verdict = check_realisable_233(G)
    out.write(_dump({
        "valid": True,
        "realisable": verdict.realisable,
        "violations": [dict(_sequence_json(G, seq), reason=reason)
                       for seq, reason in verdict.violations],
    }) + "\n")
    return EXIT_OK if verdict.realisable else EXIT_NEGATIVE


def cmd_realise(args, out):
    from .geometry.realisation import dumps_realisation, realise
    G = _load_graph(args.graph)
    try:
        R = realise(G)
    except NotRealisableError as exc:
        out.write(_dump({"realisable": False, "reason": str(exc), "cycle": exc.cycle}) + "\n")
        return EXIT_NEGATIVE
    text = dumps_realisation(R)
    if args.out:
        Path(args.out).write_text(text + "\n")
        out.write(_dump({"realisable": True, "vertices": G.vertex_count, "written": args.out}) + "\n")
    else:
        out.write(text + "\n")
    return EXIT_OK


def cmd_verify(args, out):
    from .geometry import realisation as rz
    R = rz.realisation_from_dict(json.loads(_read(args.realisation)))
    result = {
        "chamber_disjointness": rz.verify_chamber_disjointness(R),
        "residue_walls": rz.verify_residue_walls(R),
        "halfspace": rz.halfspace_check(R, args.samples, args.seed),
        "frames": rz.frame_properties(R),
    }
    out.write(_dump(result) + "\n")
    return EXIT_OK if all(result.values()) else EXIT_NEGATIVE


def cmd_chambers(args, out):
    from .geometry.arrangement import arrangement_chambers
    ch = arrangement_chambers(_load_forms(args.forms))
    out.write(_dump({"count": len(ch), "chambers": [list(c) for c in ch]}) + "\n")
    return EXIT_OK


def cmd_dual(args, out):
    from .geometry.arrangement import dual_graph
    _emit_graph(args, dual_graph(_load_forms(args.forms)), out)
    return EXIT_OK


def cmd_poincare(args, out):
    from .geometry.arrangement import expand_factors, intersection_poincare
    coeffs = intersection_poincare(_load_forms(args.forms))
    out.write(json.dumps(coeffs) + "\n")
    if args.factors is not None:
        return EXIT_OK if coeffs == expand_factors(args.factors) else EXIT_NEGATIVE
    return EXIT_OK


def cmd_iso(args, out):
    from .graph.structure import isomorphic
    G1, G2 = _load_graph(args.a), _load_graph(args.b)
    found = isomorphic(G1, G2, allow_colour_permutation=args.perm)
    if found is None:
        out.write(_dump({"isomorphic": False}) + "\n")
        return EXIT_NEGATIVE
    cmap, vmap = found
    out.write(_dump({"isomorphic": True, "colour_map": cmap, "vertex_map": vmap}) + "\n")
    return EXIT_OK


def cmd_classify3(args, out):
    from .admissible.catalog import classify_shapes_rank3
    from .relations import format_word
    C = classify_shapes_rank3(args.n)
    out.write(_dump({
        "n": C.n,
        "sim_s_classes": [{"label": c.label, "representatives": sorted(format_word(r) for r in c.representatives)}
                          for c in C.classes],
        "merged_classes": [{"label": c.label, "size": len(c.representatives)} for c in C.merged],
    }) + "\n")
    return EXIT_OK


def cmd_rank4(args, out):
    from .admissible.catalog import rank4_catalog
    report = rank4_catalog(args.cap)
    out.write(_dump(report) + "\n")
    ok = all(r.get("complete") and r.get("realisable") and r.get("irreducible")
             and r.get("isomorphic_dual") and not r.get("isomorphic_D4")
             for r in report["admissible"].values())
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_kneq(args, out):
    from .admissible.gamma import kn_equal
    from .relations import parse_word
    w1, w2 = parse_word(args.w1), parse_word(args.w2)
    equal = kn_equal(args.n, w1, w2, args.cap)
    out.write(_dump({"equal": equal}) + "\n")
    return EXIT_OK if equal else EXIT_NEGATIVE


def cmd_probe_cyclic(args, out):
    from .admissible.catalog import probe_cyclic_conjecture
    from .admissible.shapes import parse_shape
    entries = probe_cyclic_conjecture(parse_shape(args.shape, args.n), args.cap)
    out.write(_dump({"entries": [
        {"shift": e.shift, "shape": str(e.shape), "vertices": e.vertices,
         "complete": e.complete, "isomorphic": e.isomorphic} for e in entries]}) + "\n")
    return EXIT_OK if all(e.isomorphic for e in entries) else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gencox", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add("qn", cmd_qn, "list the relation words Q_n")
    sp.add_argument("--n", type=int, required=True)

    sp = add("star", cmd_star, "compute a * b")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("a")
    sp.add_argument("b")

    sp = add("act", cmd_act, "permutation action of a generator on 1..n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("generator")
    sp.add_argument("x", type=int)

    sp = add("build", cmd_build, "build the admissible graph of a shape")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--shape", required=True)
    sp.add_argument("--cap", type=int, default=64)
    sp.add_argument("--out")
    sp.add_argument("--dot", action="store_true")

    sp = add("check", cmd_check, "structure-sequence realisability check")
    sp.add_argument("graph")

    sp = add("realise", cmd_realise, "standard realisation of a graph")
    sp.add_argument("graph")
    sp.add_argument("--out")

    sp = add("verify", cmd_verify, "chamber checks on a realisation")
    sp.add_argument("realisation")
    sp.add_argument("--samples", type=int, default=2000)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("chambers", cmd_chambers, "chambers of an arrangement")
    sp.add_argument("--forms", required=True)

    sp = add("dual", cmd_dual, "dual coloured graph of an arrangement")
    sp.add_argument("--forms", required=True)
    sp.add_argument("--out")
    sp.add_argument("--dot", action="store_true")

    sp = add("poincare", cmd_poincare, "Poincare polynomial of an arrangement")
    sp.add_argument("--forms", required=True)
    sp.add_argument("--factors", type=int, nargs="*",
                    help="check against the product of (1 + n t) factors")

    sp = add("iso", cmd_iso, "isomorphism test")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--perm", action="store_true", help="allow colour permutation")

    sp = add("classify3", cmd_classify3, "rank-3 shape classification")
    sp.add_argument("--n", type=int, default=6)

    sp = add("rank4", cmd_rank4, "rank-4 admissible catalog")
    sp.add_argument("--cap", type=int, default=64)

    sp = add("kneq", cmd_kneq, "word equality in K_n")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cap", type=int, default=64)
    sp.add_argument("w1")
    sp.add_argument("w2")

    sp = add("probe-cyclic", cmd_probe_cyclic, "compare admissible graphs of cyclic permutations")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--shape", required=True)
    sp.add_argument("--cap", type=int, default=64)
    return p


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except GencoxError as exc:
        err.write(f"gencox {args.command}: {exc}\n")
        return EXIT_ERROR
    except json.JSONDecodeError as exc:
        err.write(f"gencox {args.command}: invalid JSON: {exc}\n")
        return EXIT_ERROR


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
