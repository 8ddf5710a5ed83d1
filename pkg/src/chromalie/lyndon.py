"""Lyndon words over single-marker trace words, bracketings and basis checks.

For a fixed vertex i, the alphabet consists of trace words containing exactly
one i whose initial alphabet is {i}.  Letters compare by their canonical forms
(tuple comparison, so a proper prefix sorts first).  Lyndon sequences over
this alphabet index bases of the corresponding graded components; expanding
the bracketings inside the trace algebra lets us verify independence exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import Graph, GraphError, WeightVector
from .multiplicity import root_multiplicity
from .trace import (TraceWord, canonicalize, enumerate_weight_words,
                    initial_alphabet)

LyndonSeq = tuple[TraceWord, ...]
# A bracket tree is either a leaf (a trace word, i.e. tuple of ints) or a
# pair (left, right) of bracket trees.
LieExpr = dict[TraceWord, int]


def _word_weight(w: TraceWord) -> WeightVector:
    d: dict[int, int] = {}
    for c in w:
        d[c] = d.get(c, 0) + 1
    return WeightVector.of(d)


def x_i_alphabet(g: Graph, k: WeightVector, i: int) -> list[TraceWord]:
    """All words of weight <= k componentwise that contain exactly one i and
    have initial alphabet multiset {i}; sorted by canonical form."""
    if i not in k.support:
        raise GraphError(f"vertex {i} not in the support of k")
    out = []
    others = [v for v in k.support if v != i]

    def rec(idx: int, acc: dict[int, int]):
        if idx == len(others):
            w = WeightVector.of({**acc, i: 1})
            for word in enumerate_weight_words(g, w):
                if initial_alphabet(word, g) == {i: 1}:
                    out.append(word)
            return
        v = others[idx]
        for c in range(k.get(v) + 1):
            if c:
                acc[v] = c
            rec(idx + 1, acc)
            acc.pop(v, None)

    rec(0, {})
    return sorted(out)


def is_lyndon(seq: LyndonSeq) -> bool:
    """Strictly smaller than every proper cyclic rotation."""
    if not seq:
        return False
    return all(seq < seq[r:] + seq[:r] for r in range(1, len(seq)))


def standard_factorization(seq: LyndonSeq) -> tuple[LyndonSeq, LyndonSeq]:
    """Split a Lyndon sequence as u*v with v the longest proper Lyndon suffix."""
    if len(seq) < 2 or not is_lyndon(seq):
        raise GraphError("standard factorization needs a Lyndon word of length >= 2")
    for j in range(1, len(seq)):
        u, v = seq[:j], seq[j:]
        if is_lyndon(v):
            assert is_lyndon(u) and u < v
            return u, v
    raise AssertionError("unreachable: a Lyndon word always splits")


def bracket_tree(seq: LyndonSeq):
    """Nested-pair bracketing following the standard factorization."""
    if len(seq) == 1:
        return seq[0]
    u, v = standard_factorization(seq)
    return (bracket_tree(u), bracket_tree(v))


def c_i_set(g: Graph, k: WeightVector, i: int) -> list[LyndonSeq]:
    """All Lyndon sequences over the i-marked alphabet with total weight k."""
    if k.get(i) < 1:
        raise GraphError(f"vertex {i} needs positive weight")
    letters = x_i_alphabet(g, k, i)
    results = []

    def rec(residual: WeightVector, acc: list[TraceWord]):
        if residual.is_zero:
            if is_lyndon(tuple(acc)):
                results.append(tuple(acc))
            return
        if residual.get(i) < 1:
            return
        for w in letters:
            wt = _word_weight(w)
            if wt.leq(residual):
                acc.append(w)
                rec(residual.minus(wt), acc)
                acc.pop()

    rec(k, [])
    return sorted(results)


def right_normed_nonzero(letters, g: Graph) -> bool:
    """Whether the right-normed Lie word on these letters is nonzero: the
    initial alphabet must be a single occurrence of a single letter."""
    ia = initial_alphabet(letters, g)
    return sum(ia.values()) == 1


def _check_imaginary(g: Graph) -> None:
    if not g.all_imaginary:
        raise GraphError("expansion requires an all-imaginary graph")


def _mul(a: LieExpr, b: LieExpr, g: Graph) -> LieExpr:
    out: LieExpr = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            key = canonicalize(wa + wb, g)
            out[key] = out.get(key, 0) + ca * cb
    return {w: c for w, c in out.items() if c}


def _commutator(a: LieExpr, b: LieExpr, g: Graph) -> LieExpr:
    ab = _mul(a, b, g)
    ba = _mul(b, a, g)
    out = dict(ab)
    for w, c in ba.items():
        out[w] = out.get(w, 0) - c
    return {w: c for w, c in out.items() if c}


def expand_right_normed(word, g: Graph) -> LieExpr:
    """Expansion of [e_{i1},[e_{i2},...[e_{i_{r-1}},e_{ir}]..]] in the trace
    algebra (valid model of the enveloping algebra when all vertices are
    imaginary)."""
    _check_imaginary(g)
    expr: LieExpr = {canonicalize((word[-1],), g): 1}
    for letter in reversed(word[:-1]):
        expr = _commutator({(letter,): 1}, expr, g)
    return expr


def expand_bracket(tree, g: Graph) -> LieExpr:
    """Expand a bracket tree (leaves expand as right-normed Lie words)."""
    _check_imaginary(g)
    if isinstance(tree[0], int):  # leaf: a trace word
        return expand_right_normed(tree, g)
    left, right = tree
    return _commutator(expand_bracket(left, g), expand_bracket(right, g), g)


def exact_rank(rows: list[list]) -> int:
    """Rank over the rationals by plain fraction Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    rank = 0
    col = 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            col += 1
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class BasisReport:
    multiplicity: int
    lyndon_count: int
    counts_match: bool
    rank: int
    rank_matches: bool
    right_normed_checked: bool       # only when k_i = 1
    right_normed_consistent: bool


def _expr_vector(expr: LieExpr, basis_words: list[TraceWord]) -> list[int]:
    return [expr.get(w, 0) for w in basis_words]


def verify_basis(g: Graph, k: WeightVector, i: int) -> BasisReport:
    """Check that the expanded Lyndon bracketings form a basis of the graded
    component: cardinality equals the root multiplicity and the expansions
    have full rank over the rationals."""
    _check_imaginary(g)
    if i not in k.support:
        raise GraphError(f"vertex {i} not in the support of k")
    mult = root_multiplicity(g, k)
    lyndon = c_i_set(g, k, i)
    basis_words = list(enumerate_weight_words(g, k))
    rows = []
    for seq in lyndon:
        expr = expand_bracket(bracket_tree(seq), g)
        rows.append(_expr_vector(expr, basis_words))
    rank = exact_rank(rows) if rows else 0

    rn_checked = k.get(i) == 1
    rn_consistent = True
    if rn_checked:
        nonzero_words = []
        for w in b_words_of_weight(g, k, i):
            expr = expand_right_normed(w, g)
            if bool(expr) != right_normed_nonzero(w, g):
                rn_consistent = False
            if expr:
                nonzero_words.append(_expr_vector(expr, basis_words))
        if exact_rank(nonzero_words) != len(nonzero_words) or \
                len(nonzero_words) != mult:
            rn_consistent = False

    return BasisReport(
        multiplicity=mult,
        lyndon_count=len(lyndon),
        counts_match=len(lyndon) == mult,
        rank=rank,
        rank_matches=rank == mult,
        right_normed_checked=rn_checked,
        right_normed_consistent=rn_consistent,
    )


def b_words_of_weight(g: Graph, k: WeightVector, i: int) -> list[TraceWord]:
    """Weight-k alphabet members (one i, initial alphabet {i})."""
    return [w for w in x_i_alphabet(g, k, i)
            if _word_weight(w) == k]


def render_bracket(tree) -> str:
    """Right-normed rendering, e.g. [e4,[e3,[e1,[e1,e2]]]]."""
    if isinstance(tree[0], int):  # leaf trace word, rendered right-normed
        if len(tree) == 1:
            return f"e{tree[0]}"
        return f"[e{tree[0]},{render_bracket(tree[1:])}]"
    left, right = tree
    return f"[{render_bracket(left)},{render_bracket(right)}]"
