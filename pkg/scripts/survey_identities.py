"""Survey the main identities over all connected graphs with up to a given
number of vertices (one representative per isomorphism class), reporting any
disagreement.  Slow but exhaustive; defaults finish in under a minute."""

import argparse
from itertools import combinations, permutations

from chromalie import (WeightVector, b_set, chromatic_poly,
                       chromatic_via_bond_lattice, coloring_count_oracle,
                       is_connected_sub, mult_via_orientations, new_graph,
                       root_multiplicity, trace_dimension_oracle,
                       uq_dimension)


def connected_reps(max_n):
    for m in range(1, max_n + 1):
        pairs = list(combinations(range(1, m + 1), 2))
        seen = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            g = new_graph(range(1, m + 1), edges=edges)
            if not is_connected_sub(g, g.vertices):
                continue
            key = min(tuple(sorted((min(p[u - 1], p[v - 1]),
                                    max(p[u - 1], p[v - 1]))
                                   for u, v in edges))
                      for p in permutations(range(1, m + 1)))
            if key not in seen:
                seen.add(key)
                yield g


def weights(g, max_ht):
    verts = g.vertices

    def rec(idx, acc, used):
        if idx == len(verts):
            yield WeightVector.of(dict(acc))
            return
        v = verts[idx]
        room = max_ht - used - (len(verts) - idx - 1)
        for c in range(1, room + 1):
            acc.append((v, c))
            yield from rec(idx + 1, acc, used + c)
            acc.pop()

    if len(verts) <= max_ht:
        yield from rec(0, [], 0)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-vertices", type=int, default=4)
    ap.add_argument("--max-ht", type=int, default=5)
    args = ap.parse_args()

    graphs = checked = failures = 0
    for g in connected_reps(args.max_vertices):
        graphs += 1
        for k in weights(g, args.max_ht):
            checked += 1
            p = chromatic_poly(g, k)
            ok = all(p.eval(q) == coloring_count_oracle(g, k, q)
                     for q in range(k.height + 1))
            ok = ok and chromatic_via_bond_lattice(g, k) == p
            ok = ok and uq_dimension(g, k, 1) == trace_dimension_oracle(g, k)
            m = root_multiplicity(g, k)
            for i in k.support:
                ok = ok and mult_via_orientations(g, k, i) == m
                ok = ok and len(b_set(g, k, i)) == m
            if not ok:
                failures += 1
                print(f"DISAGREEMENT edges={sorted(g.edges)} k={k.as_dict()}")
    print(f"{graphs} graphs, {checked} weight vectors, {failures} failures")


if __name__ == "__main__":
    main()
