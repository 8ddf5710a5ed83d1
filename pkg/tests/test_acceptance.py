"""End-to-end acceptance checks, one test per criterion.

Each test prints a single pass/fail line (run pytest with -s to see them) and
enforces its runtime budget.
"""

import time
from contextlib import contextmanager
from itertools import permutations

from chromalie import (WeightVector, b_set, bracket_tree, c_i_set,
                       chromatic_complete, chromatic_poly, chromatic_tree,
                       chromatic_via_bond_lattice, coloring_count_oracle,
                       complement, count_compatible_pairs, count_unique_sink,
                       enumerate_acyclic_orientations, is_triangle_free,
                       join_graph, lcs_ranks, lcs_ranks_triangle_free,
                       mult_via_orientations, new_graph,
                       ordered_partition_identity_check, render_bracket,
                       root_multiplicity, trace_dimension_oracle,
                       uq_dimension, verify_basis)
from chromalie.lyndon import expand_right_normed, right_normed_nonzero

from helpers import (all_graphs_upto, complete_graph, connected_graphs_upto,
                     full_support_weights, lyndon_content_count, path_graph,
                     witt_mult)

SHOWCASE = new_graph([1, 2, 3, 4], edges=[(1, 2), (2, 3), (2, 4), (3, 4)])
SHOWCASE_K = WeightVector.of({1: 2, 2: 1, 3: 1, 4: 1})


@contextmanager
def criterion(n: int, desc: str, limit: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"criterion {n}: FAIL ({desc})")
        raise
    elapsed = time.perf_counter() - start
    print(f"criterion {n}: PASS ({desc}, {elapsed:.1f}s)")
    assert elapsed < limit, f"criterion {n} exceeded {limit}s"


def test_criterion_1_showcase_chromatic_value():
    with criterion(1, "4-vertex example, k=(2,1,1,1), q=3 counts 6", 1.0):
        assert chromatic_poly(SHOWCASE, SHOWCASE_K).eval(3) == 6
        assert coloring_count_oracle(SHOWCASE, SHOWCASE_K, 3) == 6


def test_criterion_2_showcase_basis_and_orientations():
    with criterion(2, "multiplicity 2, frozen bracket strings, sink count 4",
                   1.0):
        assert root_multiplicity(SHOWCASE, SHOWCASE_K) == 2
        r2 = [render_bracket(bracket_tree(w))
              for w in c_i_set(SHOWCASE, SHOWCASE_K, 2)]
        assert r2 == ["[e3,[e4,[e1,[e1,e2]]]]", "[e4,[e3,[e1,[e1,e2]]]]"]
        r1 = [render_bracket(bracket_tree(w))
              for w in c_i_set(SHOWCASE, SHOWCASE_K, 1)]
        assert r1 == ["[e1,[e3,[e4,[e2,e1]]]]", "[e1,[e4,[e3,[e2,e1]]]]"]
        jg, clone_map = join_graph(SHOWCASE, SHOWCASE_K)
        sinks = [c for c, (orig, _) in clone_map.items() if orig == 2]
        assert len(sinks) == 1
        assert count_unique_sink(jg, sinks[0]) == 4


def test_criterion_3_witt_and_lyndon_oracle():
    with criterion(3, "Witt formula and Lyndon content count on K_2..K_4",
                   30.0):
        for n in (2, 3, 4):
            g = complete_graph(n)
            for k in full_support_weights(g, 8):
                counts = [k.get(v) for v in g.vertices]
                m = root_multiplicity(g, k)
                assert m == witt_mult(counts), (n, counts)
                assert m == lyndon_content_count(counts), (n, counts)


def test_criterion_4_three_route_agreement():
    with criterion(4, "Moebius / orientation / aperiodic-word agreement",
                   300.0):
        for g in connected_graphs_upto(5):
            for k in full_support_weights(g, 6):
                reference = root_multiplicity(g, k)
                for i in k.support:
                    assert mult_via_orientations(g, k, i) == reference, \
                        (g.edges, k, i)
                    assert len(b_set(g, k, i)) == reference, (g.edges, k, i)
        # real-vertex cases stay within k_i <= 1
        for g in connected_graphs_upto(4):
            real = new_graph(g.vertices, kinds={g.vertices[0]: "re"},
                             edges=g.edges)
            k = WeightVector.ones(real.vertices)
            reference = root_multiplicity(real, k)
            for i in k.support:
                assert mult_via_orientations(real, k, i) == reference
                assert len(b_set(real, k, i)) == reference


def test_criterion_5_bond_lattice_identity():
    with criterion(5, "bond-lattice expansion equals the chromatic polynomial",
                   300.0):
        for g in connected_graphs_upto(5):
            for k in full_support_weights(g, 6):
                assert chromatic_via_bond_lattice(g, k) == \
                    chromatic_poly(g, k), (g.edges, k)


def test_criterion_6_chromatic_oracle_and_closed_forms():
    with criterion(6, "coloring oracle and closed forms", 300.0):
        for g in connected_graphs_upto(5):
            for k in full_support_weights(g, 6):
                p = chromatic_poly(g, k)
                for q in range(k.height + 1):
                    assert p.eval(q) == coloring_count_oracle(g, k, q), \
                        (g.edges, k, q)
        for n in (2, 3, 4):
            g = complete_graph(n)
            for k in full_support_weights(g, 6):
                assert chromatic_complete([k.get(v) for v in g.vertices]) == \
                    chromatic_poly(g, k)
        star = new_graph([1, 2, 3, 4], edges=[(1, 2), (1, 3), (1, 4)])
        for tree in (path_graph(4), star):
            for k in full_support_weights(tree, 6):
                assert chromatic_tree(tree, k) == chromatic_poly(tree, k)


def test_criterion_7_tensor_dimensions():
    with criterion(7, "tensor-power dimensions and convolution identity",
                   300.0):
        for g in connected_graphs_upto(5):
            for k in full_support_weights(g, 6):
                assert uq_dimension(g, k, 1) == trace_dimension_oracle(g, k)
        for g in connected_graphs_upto(4):
            for k in full_support_weights(g, 5):
                for q in (2, 3):
                    assert ordered_partition_identity_check(g, k, q), \
                        (g.edges, k, q)


def test_criterion_8_reciprocity():
    with criterion(8, "compatible-pair reciprocity on graphs up to 4 vertices",
                   300.0):
        for g in all_graphs_upto(4):
            k = WeightVector.ones(g.vertices)
            orientations = len(enumerate_acyclic_orientations(g))
            for q in (1, 2, 3):
                signed = (-1) ** len(g.vertices) * \
                    chromatic_poly(g, k).eval(-q)
                pairs = count_compatible_pairs(g, q)
                assert pairs == signed, (g.edges, q)
                if q == 1:
                    assert pairs == orientations, g.edges


def test_criterion_9_basis_verification():
    with criterion(9, "Lyndon basis cardinality, rank and the zero test",
                   600.0):
        for g in all_graphs_upto(4):
            for k in full_support_weights(g, 5):
                for i in k.support:
                    report = verify_basis(g, k, i)
                    assert report.counts_match, (g.edges, k, i)
                    assert report.rank_matches, (g.edges, k, i)
                    if report.right_normed_checked:
                        assert report.right_normed_consistent, (g.edges, k, i)
                # exhaustive zero/nonzero classification of right-normed words
                letters = []
                for v, c in k.counts:
                    letters.extend([v] * c)
                for w in set(permutations(letters)):
                    assert bool(expand_right_normed(w, g)) == \
                        right_normed_nonzero(w, g), (g.edges, w)


def test_criterion_10_lower_central_series_ranks():
    with criterion(10, "integral ranks, Lucas route, path values", 300.0):
        for g in all_graphs_upto(5):
            ranks = lcs_ranks(g, 8)  # raises if any M_k is non-integral
            assert all(isinstance(m, int) for _, m in ranks)
            if is_triangle_free(complement(g)):
                assert lcs_ranks_triangle_free(g, 8) == ranks, g.edges
        path_ranks = lcs_ranks(path_graph(3), 2)
        assert (path_ranks[0][1], path_ranks[1][1]) == (3, 2)
