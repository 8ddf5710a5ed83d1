"""Command-line front end: graph ingestion, dispatch, and the cross-check
verifier.  Exit codes: 0 ok, 1 verification failure, 2 usage error, 3
precondition error."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import chromatic, hilbert, lyndon, multiplicity, trace
from .graphs import Graph, GraphError, WeightVector, complement, \
    graph_from_json, is_connected_sub, is_triangle_free

MAX_HEIGHT = 12
MAX_VERTICES = 10
SCHEMA = "1"


class UsageError(Exception):
    pass


def parse_weight_spec(spec: str, g: Graph) -> WeightVector:
    """Parse "v:count,v:count,..." against the graph's declared vertices."""
    counts: dict[int, int] = {}
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            v_str, c_str = chunk.split(":")
            v, c = int(v_str), int(c_str)
        except ValueError:
            raise UsageError(f"malformed weight entry {chunk!r}") from None
        if not g.has_vertex(v):
            raise UsageError(f"weight references undeclared vertex {v}")
        if c < 0:
            raise UsageError(f"negative count for vertex {v}")
        counts[v] = counts.get(v, 0) + c
    return WeightVector.of(counts)


def load_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            return graph_from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read graph file: {exc}") from None


def check_limits(g: Graph, k: WeightVector | None) -> None:
    if len(g.vertices) > MAX_VERTICES:
        raise GraphError(
            f"graph has {len(g.vertices)} vertices; enumerative commands are "
            f"limited to {MAX_VERTICES} (search space grows exponentially)")
    if k is not None and k.height > MAX_HEIGHT:
        raise GraphError(
            f"weight height {k.height} exceeds limit {MAX_HEIGHT}; roughly "
            f"{k.height}! = huge enumeration states")


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 \
        else str(x.numerator)


def cmd_chromatic(args) -> int:
    g = load_graph(args.graph)
    k = parse_weight_spec(args.k, g)
    check_limits(g, k)
    form = args.closed_form
    if form == "auto":
        form = "general"
    if form == "complete":
        poly = chromatic.chromatic_complete([k.get(v) for v in k.support])
    elif form == "tree":
        poly = chromatic.chromatic_tree(g, k)
    else:
        poly = chromatic.chromatic_poly(g, k)
    payload: dict = {"polynomial": poly.to_json_list()}
    lines = ["coefficients (constant first): "
             + " ".join(_frac(c) for c in poly.coeffs)]
    if args.eval is not None:
        value = poly.eval(args.eval)
        payload["eval"] = {"q": args.eval, "value": _frac(value)}
        lines.append(f"value at q={args.eval}: {_frac(value)}")
    _emit(args, payload, lines)
    return 0


def cmd_mult(args) -> int:
    g = load_graph(args.graph)
    k = parse_weight_spec(args.k, g)
    check_limits(g, k)
    if args.method == "orientations":
        sink = args.sink if args.sink is not None else k.support[0]
        value = multiplicity.mult_via_orientations(g, k, sink)
    elif args.method == "bond":
        total = Fraction(0)
        for ell in multiplicity.tuple_divisors(k):
            mu = multiplicity.moebius(ell)
            if mu:
                poly = multiplicity.chromatic_via_bond_lattice(g, k.divide(ell))
                total += Fraction(mu, ell) * abs(poly.linear_coefficient)
        value = int(total)
    else:
        value = multiplicity.root_multiplicity(g, k)
    _emit(args, {"multiplicity": value}, [str(value)])
    return 0


def cmd_basis(args) -> int:
    g = load_graph(args.graph)
    k = parse_weight_spec(args.k, g)
    check_limits(g, k)
    words = lyndon.c_i_set(g, k, args.sink)
    rendered = [lyndon.render_bracket(lyndon.bracket_tree(w)) for w in words]
    payload: dict = {"basis": rendered}
    lines = list(rendered)
    status = 0
    if args.verify:
        report = lyndon.verify_basis(g, k, args.sink)
        ok = report.counts_match and report.rank_matches and \
            report.right_normed_consistent
        payload["verify"] = {
            "multiplicity": report.multiplicity,
            "lyndon_count": report.lyndon_count,
            "rank": report.rank,
            "ok": ok,
        }
        lines.append(f"multiplicity={report.multiplicity} "
                     f"count={report.lyndon_count} rank={report.rank} "
                     f"ok={ok}")
        status = 0 if ok else 1
    _emit(args, payload, lines)
    return status


def cmd_words(args) -> int:
    g = load_graph(args.graph)
    k = parse_weight_spec(args.k, g)
    check_limits(g, k)
    if args.aperiodic_classes is not None:
        forms = trace.b_set(g, k, args.aperiodic_classes)
        rendered = [" | ".join(" ".join(map(str, f)) for f in form)
                    for form in forms]
        _emit(args, {"aperiodic_classes": rendered}, rendered)
        return 0
    if args.ia is not None:
        words = trace.b_tilde(g, k, args.ia)
    else:
        words = list(trace.enumerate_weight_words(g, k))
    rendered = [" ".join(map(str, w)) for w in words]
    _emit(args, {"words": rendered}, rendered)
    return 0


def cmd_orientations(args) -> int:
    g = load_graph(args.graph)
    check_limits(g, None)
    orientations = multiplicity.enumerate_acyclic_orientations(g)
    payload: dict = {"count": len(orientations)}
    lines = [f"acyclic orientations: {len(orientations)}"]
    if args.sink is not None:
        n = multiplicity.count_unique_sink(g, args.sink)
        payload["unique_sink"] = {"sink": args.sink, "count": n}
        lines.append(f"unique sink {args.sink}: {n}")
    if args.list:
        listing = [" ".join(f"{t}>{h}" for t, h in o.directions)
                   for o in orientations]
        payload["orientations"] = listing
        lines.extend(listing)
    _emit(args, payload, lines)
    return 0


def cmd_hilbert(args) -> int:
    g = load_graph(args.graph)
    check_limits(g, None)
    if args.max_ht > MAX_HEIGHT:
        raise GraphError(f"height bound {args.max_ht} exceeds {MAX_HEIGHT}")
    table = hilbert.series_table(g, args.q, args.max_ht)
    entries = [{"k": {str(v): c for v, c in k.counts}, "dim": d}
               for k, d in sorted(table.items())]
    payload = {"q": args.q, "entries": entries}
    lines = [f"{json.dumps(e['k'], sort_keys=True)} -> {e['dim']}"
             for e in entries]
    _emit(args, payload, lines)
    return 0


def cmd_lcs_ranks(args) -> int:
    g = load_graph(args.graph)
    check_limits(g, None)
    if args.triangle_free:
        ranks = hilbert.lcs_ranks_triangle_free(g, args.max_k)
    else:
        ranks = hilbert.lcs_ranks(g, args.max_k)
    entries = [{"k": i + 1, "N": _frac(n), "M": m}
               for i, (n, m) in enumerate(ranks)]
    _emit(args, {"ranks": entries},
          [f"k={e['k']} N={e['N']} M={e['M']}" for e in entries])
    return 0


def cmd_reciprocity(args) -> int:
    g = load_graph(args.graph)
    check_limits(g, None)
    pairs = hilbert.count_compatible_pairs(g, args.q)
    k = WeightVector.ones(g.vertices)
    signed = (-1) ** len(g.vertices) * chromatic.chromatic_poly(g, k).eval(-args.q)
    ok = pairs == signed
    _emit(args, {"q": args.q, "compatible_pairs": pairs,
                 "signed_chromatic": _frac(signed), "ok": ok},
          [f"compatible pairs: {pairs}",
           f"(-1)^n * chromatic(-q): {_frac(signed)}",
           f"agreement: {ok}"])
    return 0 if ok else 1


def _verify_failure(name: str, detail: dict) -> str:
    return json.dumps({"check": name, **detail}, sort_keys=True)


def _all_weights(g: Graph, max_ht: int):
    verts = g.vertices

    def rec(idx: int, acc: dict[int, int], used: int):
        if idx == len(verts):
            if acc:
                yield WeightVector.of(acc)
            return
        v = verts[idx]
        for c in range(max_ht - used + 1):
            if c:
                acc[v] = c
            yield from rec(idx + 1, acc, used + c)
            acc.pop(v, None)

    yield from rec(0, {}, 0)


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    check_limits(g, None)
    max_ht = args.max_ht
    if max_ht > MAX_HEIGHT:
        raise GraphError(f"height bound {max_ht} exceeds {MAX_HEIGHT}")
    failures: list[str] = []
    weights = list(_all_weights(g, max_ht))

    if not args.skip_chromatic:
        for k in weights:
            poly = chromatic.chromatic_poly(g, k)
            for q in range(k.height + 1):
                if poly.eval(q) != chromatic.coloring_count_oracle(g, k, q):
                    failures.append(_verify_failure("chromatic-oracle", {
                        "k": k.as_dict(), "q": q,
                        "poly": str(poly.eval(q)),
                        "oracle": chromatic.coloring_count_oracle(g, k, q)}))

    def mult_ok(k: WeightVector) -> bool:
        return all(g.kind(v) != "re" or k.get(v) <= 1 for v in k.support)

    if not args.skip_mult:
        for k in weights:
            if not mult_ok(k) or not is_connected_sub(g, k.support):
                continue
            reference = multiplicity.root_multiplicity(g, k)
            for i in k.support:
                via_o = multiplicity.mult_via_orientations(g, k, i)
                via_b = len(trace.b_set(g, k, i))
                if not (reference == via_o == via_b):
                    failures.append(_verify_failure("mult-three-routes", {
                        "k": k.as_dict(), "sink": i,
                        "moebius": reference, "orientations": via_o,
                        "aperiodic_words": via_b}))

    if not args.skip_bond:
        for k in weights:
            if not mult_ok(k):
                continue
            if multiplicity.chromatic_via_bond_lattice(g, k) != \
                    chromatic.chromatic_poly(g, k):
                failures.append(_verify_failure("bond-lattice-identity",
                                                {"k": k.as_dict()}))

    if not args.skip_brecursion:
        for k in weights:
            for i in k.support:
                lhs = len(trace.b_tilde(g, k, i))
                rhs = sum((k.get(i) // ell) *
                          len(trace.b_set(g, k.divide(ell), i))
                          for ell in multiplicity.tuple_divisors(k))
                if lhs != rhs:
                    failures.append(_verify_failure("b-recursion", {
                        "k": k.as_dict(), "sink": i,
                        "b_tilde": lhs, "recursion": rhs}))

    if g.all_imaginary and not args.skip_tensor:
        for k in weights:
            if hilbert.uq_dimension(g, k, 1) != \
                    hilbert.trace_dimension_oracle(g, k):
                failures.append(_verify_failure("tensor-dimension",
                                                {"k": k.as_dict()}))

    if not args.skip_reciprocity:
        for q in (1, 2, 3):
            k = WeightVector.ones(g.vertices)
            signed = (-1) ** len(g.vertices) * \
                chromatic.chromatic_poly(g, k).eval(-q)
            if hilbert.count_compatible_pairs(g, q) != signed:
                failures.append(_verify_failure("reciprocity", {"q": q}))

    if g.all_imaginary and not args.skip_lucas and \
            is_triangle_free(complement(g)):
        if hilbert.lcs_ranks(g, max_ht) != \
                hilbert.lcs_ranks_triangle_free(g, max_ht):
            failures.append(_verify_failure("lucas-ranks", {}))

    for f in failures:
        print(f)
    if failures:
        return 1
    print(f"all checks passed ({len(weights)} weight vectors, height <= {max_ht})")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromalie",
        description="Chromatic polynomials, root multiplicities, trace-word "
                    "bases and Hilbert-series data for graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_k=True):
        p.add_argument("--graph", required=True, help="graph JSON file")
        if need_k:
            p.add_argument("--k", required=True,
                           help='weight spec "v:count,v:count,..."')
        p.add_argument("--json", action="store_true",
                       help="machine-readable output")

    p = sub.add_parser("chromatic", help="generalized chromatic polynomial")
    common(p)
    p.add_argument("--eval", type=int, default=None, metavar="Q")
    p.add_argument("--closed-form", default="auto",
                   choices=["auto", "complete", "tree", "general"])
    p.set_defaults(func=cmd_chromatic)

    p = sub.add_parser("mult", help="root multiplicity")
    common(p)
    p.add_argument("--method", default="moebius",
                   choices=["moebius", "bond", "orientations"])
    p.add_argument("--sink", type=int, default=None)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("basis", help="Lyndon-word basis of a root space")
    common(p)
    p.add_argument("--sink", type=int, required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("words", help="trace words of a given weight")
    common(p)
    p.add_argument("--ia", type=int, default=None,
                   help="restrict to initial alphabet {i}")
    p.add_argument("--aperiodic-classes", type=int, default=None,
                   help="aperiodic cyclic classes for sink i")
    p.set_defaults(func=cmd_words)

    p = sub.add_parser("orientations", help="acyclic orientations")
    common(p, need_k=False)
    p.add_argument("--sink", type=int, default=None)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_orientations)

    p = sub.add_parser("hilbert", help="graded tensor-power dimensions")
    common(p, need_k=False)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--max-ht", type=int, required=True)
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("lcs-ranks", help="lower-central-series ranks")
    common(p, need_k=False)
    p.add_argument("--max-k", type=int, required=True)
    p.add_argument("--triangle-free", action="store_true",
                   help="use the Lucas closed form (complement must be "
                        "triangle free)")
    p.set_defaults(func=cmd_lcs_ranks)

    p = sub.add_parser("reciprocity", help="compatible-pair reciprocity check")
    common(p, need_k=False)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(func=cmd_reciprocity)

    p = sub.add_parser("verify", help="run the identity cross-check suite")
    common(p, need_k=False)
    p.add_argument("--max-ht", type=int, default=5)
    for flag in ("chromatic", "mult", "bond", "brecursion", "tensor",
                 "reciprocity", "lucas"):
        p.add_argument(f"--skip-{flag}", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
