"""The free partially commutative monoid of a graph.

Letters are vertex ids; two letters commute exactly when they are distinct
and non-adjacent.  Every element is represented by its canonical form: the
lexicographically maximal word in its commutation class (as a tuple of ints).
Equal letters are treated as dependent, so a swap of equal letters is a no-op.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Iterable, Sequence

from .graphs import Graph, GraphError, WeightVector

TraceWord = tuple[int, ...]
IForm = tuple[TraceWord, ...]


def _dependent(g: Graph, a: int, b: int) -> bool:
    return a == b or g.adjacent(a, b)


def canonicalize(letters: Sequence[int], g: Graph) -> TraceWord:
    """Lexicographically maximal representative of the commutation class.

    Greedy: repeatedly emit the largest letter among the positions that are
    minimal in the dependence order of the remaining positions.  Among equal
    letters only the earliest is minimal, so the choice is unique.
    """
    for c in letters:
        if not g.has_vertex(c):
            raise GraphError(f"unknown letter {c}")
    remaining = list(letters)
    out = []
    while remaining:
        best_idx = -1
        for j, c in enumerate(remaining):
            if any(_dependent(g, remaining[m], c) for m in range(j)):
                continue
            if best_idx < 0 or c > remaining[best_idx]:
                best_idx = j
        out.append(remaining.pop(best_idx))
    return tuple(out)


def initial_alphabet(w: Sequence[int], g: Graph) -> Counter:
    """Multiset IA_m: letter i has multiplicity m iff m copies of i can be
    stripped from the end, one representative at a time (w = u * i^m)."""
    ia: Counter = Counter()
    for i in set(w):
        seq = list(w)
        m = 0
        while True:
            try:
                p = len(seq) - 1 - seq[::-1].index(i)
            except ValueError:
                break
            if any(_dependent(g, i, seq[j]) for j in range(p + 1, len(seq))):
                break
            del seq[p]
            m += 1
        if m:
            ia[i] = m
    return ia


def initial_alphabet_set(w: Sequence[int], g: Graph) -> frozenset[int]:
    return frozenset(initial_alphabet(w, g))


def i_form(w: Sequence[int], i: int, g: Graph) -> IForm:
    """Unique factorization w = w_1 ... w_m (m = number of i's) with every
    factor containing one i and having initial alphabet exactly {i}.

    The last factor is maximal: it consists of every position not forced
    (through the dependence order) to precede the second-to-last i.
    """
    if initial_alphabet_set(w, g) != frozenset({i}):
        raise GraphError(f"word does not have initial alphabet {{{i}}}")
    seq = list(canonicalize(w, g))
    factors: list[TraceWord] = []
    while True:
        positions = [p for p, c in enumerate(seq) if c == i]
        if len(positions) <= 1:
            factors.append(canonicalize(seq, g))
            break
        p_prev = positions[-2]
        below = {p_prev}
        for j in range(p_prev - 1, -1, -1):
            if any(_dependent(g, seq[j], seq[m]) for m in below if m > j):
                below.add(j)
        factors.append(canonicalize(
            [seq[j] for j in range(len(seq)) if j not in below], g))
        seq = [seq[j] for j in sorted(below)]
    factors.reverse()
    return tuple(factors)


def concat(factors: Iterable[Sequence[int]], g: Graph) -> TraceWord:
    flat: list[int] = []
    for f in factors:
        flat.extend(f)
    return canonicalize(flat, g)


def is_aperiodic(f: IForm, g: Graph) -> bool:
    """True iff all cyclic rotations of the factor sequence are distinct traces."""
    rotations = {concat(f[r:] + f[:r], g) for r in range(len(f))}
    return len(rotations) == len(f)


def cyclic_class_rep(f: IForm, g: Graph) -> IForm:
    """Rotation whose concatenated canonical form is lexicographically least."""
    best = None
    for r in range(len(f)):
        rot = f[r:] + f[:r]
        key = concat(rot, g)
        if best is None or key < best[0]:
            best = (key, rot)
    return best[1]


@lru_cache(maxsize=None)
def enumerate_weight_words(g: Graph, k: WeightVector,
                           max_height: int = 12) -> tuple[TraceWord, ...]:
    """All trace-monoid elements of the given weight, as sorted canonical forms.

    Depth-first generation with canonical-prefix pruning: a letter may be
    appended only if the extended word is still its class's canonical form.
    """
    k.check_support(g)
    if k.height > max_height:
        raise GraphError(f"height {k.height} exceeds limit {max_height}")
    out: list[TraceWord] = []
    residual = k.as_dict()
    prefix: list[int] = []

    def extension_canonical(c: int) -> bool:
        # c may not be movable before any smaller letter: scan back while
        # independent; hitting a smaller independent letter breaks canonicity.
        for m in range(len(prefix) - 1, -1, -1):
            if _dependent(g, prefix[m], c):
                return True
            if c > prefix[m]:
                return False
        return True

    def rec():
        if all(v == 0 for v in residual.values()):
            out.append(tuple(prefix))
            return
        for c in k.support:
            if residual[c] and extension_canonical(c):
                residual[c] -= 1
                prefix.append(c)
                rec()
                prefix.pop()
                residual[c] += 1

    rec()
    return tuple(sorted(out))


def b_tilde(g: Graph, k: WeightVector, i: int) -> list[TraceWord]:
    """Weight-k words whose initial alphabet (as a set) is exactly {i}."""
    if i not in k.support:
        raise GraphError(f"vertex {i} not in the support of k")
    return [w for w in enumerate_weight_words(g, k)
            if initial_alphabet_set(w, g) == frozenset({i})]


def b_set(g: Graph, k: WeightVector, i: int) -> list[IForm]:
    """Aperiodic members of b_tilde, one i-form per cyclic rotation class."""
    reps = set()
    for w in b_tilde(g, k, i):
        f = i_form(w, i, g)
        if is_aperiodic(f, g):
            reps.add(cyclic_class_rep(f, g))
    return sorted(reps)
