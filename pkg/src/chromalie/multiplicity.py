"""Root multiplicities by independent routes, plus acyclic orientations.

Routes implemented here:
  * Moebius inversion over the linear coefficient of the chromatic polynomial,
  * the weighted bond-lattice expansion of the chromatic polynomial,
  * counting acyclic orientations with a unique sink on the join graph.
A third combinatorial route (aperiodic trace words) lives in trace.py.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .chromatic import chromatic_poly
from .graphs import (Graph, GraphError, REAL, WeightVector, is_connected_sub,
                     join_graph)
from .polynomials import QPolynomial, scaled_binomial


def moebius(n: int) -> int:
    if n < 1:
        raise ValueError("moebius needs a positive integer")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def tuple_divisors(k: WeightVector) -> list[int]:
    """Ascending divisors of gcd of the nonzero entries ("l divides k")."""
    if k.is_zero:
        raise GraphError("zero weight vector has no tuple divisors")
    g = k.gcd()
    return [d for d in range(1, g + 1) if g % d == 0]


def _check_real_constraint(g: Graph, k: WeightVector) -> None:
    for v in k.support:
        if g.kind(v) == REAL and k.get(v) > 1:
            raise GraphError(
                f"real vertex {v} carries weight {k.get(v)} > 1")


@lru_cache(maxsize=None)
def root_multiplicity(g: Graph, k: WeightVector) -> int:
    """Moebius-inversion formula over |linear coefficient of chromatic_poly|.

    Returns 0 on disconnected support (the root space vanishes there).
    """
    if k.is_zero:
        raise GraphError("zero weight vector")
    k.check_support(g)
    _check_real_constraint(g, k)
    if not is_connected_sub(g, k.support):
        return 0
    total = Fraction(0)
    for ell in tuple_divisors(k):
        mu = moebius(ell)
        if mu == 0:
            continue
        coeff = chromatic_poly(g, k.divide(ell)).linear_coefficient
        total += Fraction(mu, ell) * abs(coeff)
    assert total.denominator == 1 and total >= 0
    return int(total)


@dataclass(frozen=True)
class BondPartition:
    """Multiset of connected-support weight vectors summing to an ambient one."""

    parts: tuple[WeightVector, ...]  # sorted descending, repeats allowed

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)


def _connected_subweights(g: Graph, k: WeightVector) -> list[WeightVector]:
    support = k.support
    out = []

    def rec(idx: int, acc: dict[int, int]):
        if idx == len(support):
            if acc:
                w = WeightVector.of(acc)
                if is_connected_sub(g, w.support):
                    out.append(w)
            return
        v = support[idx]
        for c in range(k.get(v) + 1):
            if c:
                acc[v] = c
            rec(idx + 1, acc)
            acc.pop(v, None)

    rec(0, {})
    return sorted(out, reverse=True)


def bond_lattice(g: Graph, k: WeightVector) -> list[BondPartition]:
    """All multisets of connected-support weight vectors that sum to k."""
    k.check_support(g)
    if k.is_zero:
        return [BondPartition(())]
    candidates = _connected_subweights(g, k)
    results: list[BondPartition] = []

    def rec(residual: WeightVector, start: int, acc: list[WeightVector]):
        if residual.is_zero:
            results.append(BondPartition(tuple(acc)))
            return
        for idx in range(start, len(candidates)):
            j = candidates[idx]
            if j.leq(residual):
                acc.append(j)
                rec(residual.minus(j), idx, acc)
                acc.pop()

    rec(k, 0, [])
    return results


def chromatic_via_bond_lattice(g: Graph, k: WeightVector) -> QPolynomial:
    """Chromatic polynomial rebuilt from root multiplicities: a signed sum over
    the weighted bond lattice of products C(q*mult(part sum), part repetition)."""
    k.check_support(g)
    _check_real_constraint(g, k)
    if k.is_zero:
        return QPolynomial.of([1])
    ht = k.height
    total = QPolynomial.of([])
    for partition in bond_lattice(g, k):
        sign = (-1) ** (ht + len(partition))
        term = QPolynomial.of([sign])
        for part, rep in sorted(partition.multiplicities().items()):
            term = term * scaled_binomial(root_multiplicity(g, part), rep)
        total = total + term
    return total


@dataclass(frozen=True)
class Orientation:
    """Assignment of a direction to every edge; (tail, head) per sorted edge."""

    directions: tuple[tuple[int, int], ...]

    def sinks(self, g: Graph) -> tuple[int, ...]:
        tails = {t for t, _ in self.directions}
        return tuple(v for v in g.vertices if v not in tails)


def enumerate_acyclic_orientations(g: Graph) -> list[Orientation]:
    """All acyclic orientations, deterministic order.  Directions are assigned
    edge by edge (sorted edge order), pruning as soon as a cycle appears."""
    edges = sorted(g.edges)
    out: list[Orientation] = []
    succ: dict[int, set[int]] = {v: set() for v in g.vertices}

    def reaches(a: int, b: int) -> bool:
        stack, seen = [a], {a}
        while stack:
            u = stack.pop()
            if u == b:
                return True
            for w in succ[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return False

    def rec(idx: int, acc: list[tuple[int, int]]):
        if idx == len(edges):
            out.append(Orientation(tuple(acc)))
            return
        u, v = edges[idx]
        for tail, head in ((u, v), (v, u)):
            if not reaches(head, tail):  # adding tail->head stays acyclic
                succ[tail].add(head)
                acc.append((tail, head))
                rec(idx + 1, acc)
                acc.pop()
                succ[tail].remove(head)

    rec(0, [])
    return out


@lru_cache(maxsize=None)
def _unique_sink_counts(g: Graph) -> dict[int, int]:
    counts = {v: 0 for v in g.vertices}
    for o in enumerate_acyclic_orientations(g):
        sinks = o.sinks(g)
        if len(sinks) == 1:
            counts[sinks[0]] += 1
    return counts


def count_unique_sink(g: Graph, sink: int) -> int:
    if not g.has_vertex(sink):
        raise GraphError(f"unknown sink {sink}")
    if not is_connected_sub(g, g.vertices):
        raise GraphError("unique-sink counting needs a connected graph")
    return _unique_sink_counts(g)[sink]


def mult_via_orientations(g: Graph, k: WeightVector, i: int) -> int:
    """Multiplicity from unique-sink acyclic orientation counts on join graphs.

    All clones of i are equivalent sinks; we average over them, and tests
    assert the per-clone counts agree.
    """
    if i not in k.support:
        raise GraphError(f"vertex {i} not in the support of k")
    _check_real_constraint(g, k)
    if not is_connected_sub(g, k.support):
        return 0
    total = Fraction(0)
    for ell in tuple_divisors(k):
        mu = moebius(ell)
        if mu == 0:
            continue
        sub = k.divide(ell)
        jg, clone_map = join_graph(g, sub)
        clones = [c for c, (orig, _) in clone_map.items() if orig == i]
        sink_sum = sum(count_unique_sink(jg, c) for c in clones)
        weight_factorial = 1
        for _, c in sub.counts:
            weight_factorial *= factorial(c)
        total += (Fraction(mu, ell) * Fraction(sink_sum, len(clones))
                  / weight_factorial)
    assert total.denominator == 1 and total >= 0
    return int(total)
