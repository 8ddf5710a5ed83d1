"""Graded dimensions, reciprocity checks and lower-central-series ranks.

Everything here lives in the all-imaginary regime, where the enveloping
algebra of the positive part has the trace monoid as a linear basis.  The
graded dimensions of its q-fold tensor power are chromatic-polynomial values
at -q (up to sign), which is what Stanley-style reciprocity rests on.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .chromatic import chromatic_poly
from .graphs import Graph, GraphError, WeightVector, complement, \
    enumerate_independent_sets, is_triangle_free
from .multiplicity import enumerate_acyclic_orientations, moebius
from .polynomials import QPolynomial
from .trace import enumerate_weight_words


def _check_imaginary(g: Graph) -> None:
    if not g.all_imaginary:
        raise GraphError("this computation requires an all-imaginary graph")


def uq_dimension(g: Graph, k: WeightVector, q: int) -> int:
    """Dimension of the weight-k component of the q-fold tensor power of the
    enveloping algebra: (-1)^ht(k) * chromatic_poly(k) evaluated at -q."""
    _check_imaginary(g)
    if q < 1:
        raise GraphError("q must be a positive integer")
    value = (-1) ** k.height * chromatic_poly(g, k).eval(-q)
    assert value.denominator == 1 and value >= 0
    return int(value)


def trace_dimension_oracle(g: Graph, k: WeightVector) -> int:
    """Independent count of weight-k trace words (the q=1 dimension)."""
    _check_imaginary(g)
    return len(enumerate_weight_words(g, k))


def _ordered_weight_partitions(k: WeightVector, q: int):
    """All ordered q-tuples of (possibly zero) weight vectors summing to k."""
    support = k.support
    per_vertex = []
    for v in support:
        per_vertex.append([comp for comp in _compositions(k.get(v), q)])
    for combo in product(*per_vertex):
        yield tuple(
            WeightVector.of({v: combo[vi][j] for vi, v in enumerate(support)})
            for j in range(q))


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def ordered_partition_identity_check(g: Graph, k: WeightVector, q: int) -> bool:
    """Brute-force check that chromatic_poly(k) at -q equals the sum over
    ordered q-part decompositions of products of values at -1 (empty parts
    contribute a factor 1)."""
    _check_imaginary(g)
    if q < 1:
        raise GraphError("q must be a positive integer")
    lhs = chromatic_poly(g, k).eval(-q)
    rhs = Fraction(0)
    for decomposition in _ordered_weight_partitions(k, q):
        term = Fraction(1)
        for part in decomposition:
            if not part.is_zero:
                term *= chromatic_poly(g, part).eval(-1)
        rhs += term
    return lhs == rhs


def count_compatible_pairs(g: Graph, q: int) -> int:
    """Number of pairs (vertex labeling into {1..q}, acyclic orientation) with
    labels non-increasing along every directed edge; brute force."""
    if q < 1:
        raise GraphError("q must be a positive integer")
    orientations = enumerate_acyclic_orientations(g)
    total = 0
    for labels in product(range(1, q + 1), repeat=len(g.vertices)):
        sigma = dict(zip(g.vertices, labels))
        for o in orientations:
            if all(sigma[t] >= sigma[h] for t, h in o.directions):
                total += 1
    return total


def independent_set_polynomial(g: Graph) -> QPolynomial:
    """Counts of independent sets by size, as a polynomial (constant term 1)."""
    counts: dict[int, int] = {}
    for s in enumerate_independent_sets(g):
        counts[len(s)] = counts.get(len(s), 0) + 1
    degree = max(counts)
    return QPolynomial.of([counts.get(i, 0) for i in range(degree + 1)])


def _log_series(coeffs: list[Fraction], max_k: int) -> list[Fraction]:
    """Coefficients 1..max_k of -log(U) for U = 1 + sum coeffs[j] X^j."""
    u = [Fraction(0)] * (max_k + 1)
    for j, c in enumerate(coeffs):
        if 0 < j <= max_k:
            u[j] = Fraction(c)
    # -log(1 + u) = sum_{m>=1} (-1)^m u^m / m, truncated at degree max_k
    result = [Fraction(0)] * (max_k + 1)
    power = [Fraction(1)] + [Fraction(0)] * max_k  # u^0
    for m in range(1, max_k + 1):
        nxt = [Fraction(0)] * (max_k + 1)
        for a in range(max_k + 1):
            if power[a] == 0:
                continue
            for b in range(1, max_k + 1 - a):
                if u[b]:
                    nxt[a + b] += power[a] * u[b]
        power = nxt
        sign = Fraction((-1) ** m, m)
        for d in range(max_k + 1):
            result[d] += sign * power[d]
    return result[1:]


def lcs_ranks(g: Graph, max_k: int) -> list[tuple[Fraction, int]]:
    """Pairs (N_k, M_k) for k = 1..max_k from the alternating independent-set
    polynomial: N_k are the coefficients of its negated logarithm, and the
    integers M_k follow by Moebius inversion (graded ranks by bracket length)."""
    _check_imaginary(g)
    if max_k < 1:
        raise GraphError("max_k must be positive")
    isp = independent_set_polynomial(g)
    alternating = [((-1) ** j) * isp.coefficient(j)
                   for j in range(isp.degree + 1)]
    n_values = _log_series(alternating, max_k)
    out = []
    for k in range(1, max_k + 1):
        m = sum(Fraction(moebius(d), d) * n_values[k // d - 1]
                for d in range(1, k + 1) if k % d == 0)
        if m.denominator != 1:
            raise GraphError(f"non-integral rank M_{k} = {m}; implementation bug")
        out.append((n_values[k - 1], int(m)))
    return out


def lucas_value(ell: int, s: int, t: int) -> int:
    """Two-variable Lucas value by the recurrence <l> = s<l-1> + t<l-2>,
    <0> = 2, <1> = s."""
    if ell < 0:
        raise GraphError("ell must be non-negative")
    prev, cur = 2, s
    if ell == 0:
        return prev
    for _ in range(ell - 1):
        prev, cur = cur, s * cur + t * prev
    return cur


def lucas_value_closed(ell: int, s: int, t: int) -> int:
    """Closed-sum form of the Lucas value; cross-check for the recurrence."""
    if ell < 0:
        raise GraphError("ell must be non-negative")
    if ell == 0:
        return 2
    total = Fraction(0)
    for j in range(ell // 2 + 1):
        total += (Fraction(ell, ell - j) * _binom(ell - j, j)
                  * Fraction(t) ** j * Fraction(s) ** (ell - 2 * j))
    assert total.denominator == 1
    return int(total)


def _binom(n: int, k: int) -> int:
    from math import comb
    return comb(n, k)


def lcs_ranks_triangle_free(g: Graph, max_k: int) -> list[tuple[Fraction, int]]:
    """Lucas-polynomial closed form for the ranks, valid when the complement
    graph is triangle free: N_k = <k>_{v,-e}/k with v, e the complement's
    vertex and edge counts."""
    _check_imaginary(g)
    comp = complement(g)
    if not is_triangle_free(comp):
        raise GraphError("complement graph has a triangle")
    v, e = len(comp.vertices), len(comp.edges)
    out = []
    for k in range(1, max_k + 1):
        n_k = Fraction(lucas_value(k, v, -e), k)
        m = Fraction(sum(moebius(k // d) * lucas_value(d, v, -e)
                         for d in range(1, k + 1) if k % d == 0), k)
        if m.denominator != 1:
            raise GraphError(f"non-integral rank M_{k} = {m}; implementation bug")
        out.append((n_k, int(m)))
    return out


def series_table(g: Graph, q: int, max_height: int) -> dict[WeightVector, int]:
    """Graded dimensions of the q-fold tensor power for every weight vector of
    height at most the bound (the zero weight included, with dimension 1)."""
    _check_imaginary(g)
    if max_height < 0:
        raise GraphError("height bound must be non-negative")
    table: dict[WeightVector, int] = {}

    def rec(idx: int, acc: dict[int, int], used: int):
        if idx == len(g.vertices):
            k = WeightVector.of(acc)
            table[k] = 1 if k.is_zero else uq_dimension(g, k, q)
            return
        v = g.vertices[idx]
        for c in range(max_height - used + 1):
            if c:
                acc[v] = c
            rec(idx + 1, acc, used + c)
            acc.pop(v, None)

    rec(0, {}, 0)
    return table
