"""Shared graph families and independent oracles for the test suite."""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial, gcd

from chromalie import Graph, WeightVector, new_graph
from chromalie.multiplicity import moebius


def path_graph(n: int) -> Graph:
    return new_graph(range(1, n + 1), edges=[(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return new_graph(range(1, n + 1), edges=edges)


def complete_graph(n: int) -> Graph:
    return new_graph(range(1, n + 1), edges=combinations(range(1, n + 1), 2))


def _canonical_edges(n: int, edges: frozenset) -> tuple:
    best = None
    for perm in permutations(range(1, n + 1)):
        relabel = dict(zip(range(1, n + 1), perm))
        key = tuple(sorted((min(relabel[u], relabel[v]),
                            max(relabel[u], relabel[v])) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def connected_graphs_upto(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of connected graphs on at most
    n vertices (vertices labeled 1..m)."""
    out = []
    for m in range(1, n + 1):
        pairs = list(combinations(range(1, m + 1), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = new_graph(range(1, m + 1), edges=edges)
            from chromalie import is_connected_sub
            if not is_connected_sub(g, g.vertices):
                continue
            key = _canonical_edges(m, g.edges)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return tuple(out)


@lru_cache(maxsize=None)
def all_graphs_upto(n: int) -> tuple[Graph, ...]:
    """Isomorphism-class representatives of all graphs on at most n vertices."""
    out = []
    for m in range(1, n + 1):
        pairs = list(combinations(range(1, m + 1), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = new_graph(range(1, m + 1), edges=edges)
            key = _canonical_edges(m, g.edges)
            if key not in seen:
                seen.add(key)
                out.append(g)
    return tuple(out)


def full_support_weights(g: Graph, max_ht: int):
    """Weight vectors with every vertex weighted at least once, height bounded."""
    verts = g.vertices

    def rec(idx, acc, used):
        if idx == len(verts):
            yield WeightVector.of(dict(acc))
            return
        v = verts[idx]
        remaining_min = len(verts) - idx - 1
        for c in range(1, max_ht - used - remaining_min + 1):
            acc.append((v, c))
            yield from rec(idx + 1, acc, used + c)
            acc.pop()

    if len(verts) <= max_ht:
        yield from rec(0, [], 0)


def witt_mult(k: list[int]) -> Fraction:
    """Classical Witt formula for the free Lie algebra (complete graph case)."""
    ht = sum(k)
    g = k[0]
    for c in k[1:]:
        g = gcd(g, c)
    total = Fraction(0)
    for ell in range(1, g + 1):
        if g % ell:
            continue
        kk = [c // ell for c in k]
        denom = 1
        for c in kk:
            denom *= factorial(c)
        total += Fraction(moebius(ell) * factorial(sum(kk)), denom)
    return total / ht


def lyndon_content_count(k: list[int]) -> int:
    """Brute-force count of Lyndon words over {1..n} with letter i used k_i
    times: enumerate all distinct arrangements, keep those strictly smaller
    than every proper rotation."""
    letters = []
    for i, c in enumerate(k, start=1):
        letters.extend([i] * c)
    count = 0
    for w in set(permutations(letters)):
        if all(w < w[r:] + w[:r] for r in range(1, len(w))):
            count += 1
    return count
