"""Finite simple graphs with real/imaginary vertex kinds, and weight vectors.

Vertices are non-negative integers; the ascending numeric order of the
vertex ids is the single total order used everywhere downstream (alphabet
order for trace words, lexicographic comparisons, deterministic output).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

REAL = "re"
IMAGINARY = "im"


class GraphError(ValueError):
    """Raised on malformed graph or weight-vector input."""


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]          # strictly increasing
    kinds: tuple[str, ...]             # aligned with vertices, "re" or "im"
    edges: frozenset[tuple[int, int]]  # each pair stored as (min, max)

    def kind(self, v: int) -> str:
        try:
            return self.kinds[self.vertices.index(v)]
        except ValueError:
            raise GraphError(f"unknown vertex {v}") from None

    @property
    def all_imaginary(self) -> bool:
        return all(k == IMAGINARY for k in self.kinds)

    def has_vertex(self, v: int) -> bool:
        return v in self.vertices

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        if v not in self.vertices:
            raise GraphError(f"unknown vertex {v}")
        return tuple(u for u in self.vertices if u != v and self.adjacent(u, v))

    def induced(self, s: Iterable[int]) -> "Graph":
        keep = set(s)
        unknown = keep - set(self.vertices)
        if unknown:
            raise GraphError(f"unknown vertices {sorted(unknown)}")
        verts = tuple(v for v in self.vertices if v in keep)
        kinds = tuple(self.kind(v) for v in verts)
        edges = frozenset(e for e in self.edges if e[0] in keep and e[1] in keep)
        return Graph(verts, kinds, edges)


def new_graph(vertices: Iterable[int],
              kinds: Mapping[int, str] | None = None,
              edges: Iterable[tuple[int, int]] = ()) -> Graph:
    """Build a validated graph; kinds default to imaginary for every vertex."""
    verts = sorted(vertices)
    if len(verts) != len(set(verts)):
        raise GraphError("duplicate vertex id")
    if any(v < 0 for v in verts):
        raise GraphError("vertex ids must be non-negative")
    vset = set(verts)
    kinds = dict(kinds or {})
    for v, k in kinds.items():
        if v not in vset:
            raise GraphError(f"kind given for undeclared vertex {v}")
        if k not in (REAL, IMAGINARY):
            raise GraphError(f"unknown vertex kind {k!r}")
    edge_set = set()
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        if u not in vset or v not in vset:
            raise GraphError(f"edge ({u},{v}) references undeclared vertex")
        edge_set.add((min(u, v), max(u, v)))
    vt = tuple(verts)
    kt = tuple(kinds.get(v, IMAGINARY) for v in verts)
    return Graph(vt, kt, frozenset(edge_set))


def complement(g: Graph) -> Graph:
    edges = frozenset((u, v) for u, v in combinations(g.vertices, 2)
                      if not g.adjacent(u, v))
    return Graph(g.vertices, g.kinds, edges)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    s = list(s)
    for v in s:
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v}")
    return not any(g.adjacent(u, v) for u, v in combinations(s, 2))


def is_connected_sub(g: Graph, s: Iterable[int]) -> bool:
    """Connectivity of the induced subgraph; empty set counts as disconnected."""
    s = set(s)
    for v in s:
        if not g.has_vertex(v):
            raise GraphError(f"unknown vertex {v}")
    if not s:
        return False
    start = next(iter(s))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in s and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == s


def enumerate_independent_sets(g: Graph) -> list[frozenset[int]]:
    """All independent vertex sets including the empty set, size-then-lex order."""
    out = []
    for r in range(len(g.vertices) + 1):
        for combo in combinations(g.vertices, r):
            if is_independent(g, combo):
                out.append(frozenset(combo))
    return out


def is_triangle_free(g: Graph) -> bool:
    return not any(g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(a, c)
                   for a, b, c in combinations(g.vertices, 3))


@dataclass(frozen=True, order=True)
class WeightVector:
    """Finitely supported map vertex -> positive count, zeros dropped."""

    counts: tuple[tuple[int, int], ...]  # (vertex, count), vertex ascending

    @classmethod
    def of(cls, mapping: Mapping[int, int] | Iterable[tuple[int, int]]) -> "WeightVector":
        items = dict(mapping)
        if any(c < 0 for c in items.values()):
            raise GraphError("negative weight entry")
        return cls(tuple(sorted((v, c) for v, c in items.items() if c > 0)))

    @classmethod
    def ones(cls, vertices: Iterable[int]) -> "WeightVector":
        return cls.of({v: 1 for v in vertices})

    def get(self, v: int) -> int:
        return dict(self.counts).get(v, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.counts)

    @property
    def height(self) -> int:
        return sum(c for _, c in self.counts)

    @property
    def is_zero(self) -> bool:
        return not self.counts

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def gcd(self) -> int:
        return math.gcd(*(c for _, c in self.counts)) if self.counts else 0

    def divide(self, ell: int) -> "WeightVector":
        if any(c % ell for _, c in self.counts):
            raise GraphError(f"{ell} does not divide every entry")
        return WeightVector(tuple((v, c // ell) for v, c in self.counts))

    def leq(self, other: "WeightVector") -> bool:
        o = other.as_dict()
        return all(c <= o.get(v, 0) for v, c in self.counts)

    def minus(self, other: "WeightVector") -> "WeightVector":
        d = self.as_dict()
        for v, c in other.counts:
            d[v] = d.get(v, 0) - c
        if any(c < 0 for c in d.values()):
            raise GraphError("weight subtraction went negative")
        return WeightVector.of(d)

    def plus(self, other: "WeightVector") -> "WeightVector":
        d = self.as_dict()
        for v, c in other.counts:
            d[v] = d.get(v, 0) + c
        return WeightVector.of(d)

    def check_support(self, g: Graph) -> None:
        for v in self.support:
            if not g.has_vertex(v):
                raise GraphError(f"weight vector references unknown vertex {v}")


def join_graph(g: Graph, k: WeightVector) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Replace vertex j by a clique of k_j clones; cliques of adjacent originals
    fully joined.  Vertices outside support(k) are dropped.

    Clone ids are fresh consecutive integers; the clone map sends each new id to
    (original vertex, copy index starting at 1).
    """
    k.check_support(g)
    if k.is_zero:
        raise GraphError("join graph needs nonempty support")
    clone_map: dict[int, tuple[int, int]] = {}
    next_id = 0
    by_original: dict[int, list[int]] = {}
    for v, c in k.counts:
        by_original[v] = []
        for r in range(1, c + 1):
            clone_map[next_id] = (v, r)
            by_original[v].append(next_id)
            next_id += 1
    edges = set()
    for v, clones in by_original.items():
        edges.update(combinations(clones, 2))
    for u, v in combinations(by_original, 2):
        if g.adjacent(u, v):
            edges.update((a, b) for a in by_original[u] for b in by_original[v])
    kinds = {c: g.kind(orig) for c, (orig, _) in clone_map.items()}
    return new_graph(clone_map.keys(), kinds, edges), clone_map


def graph_from_json(text: str) -> Graph:
    """Parse {"vertices":[{"id":int,"kind":"re"|"im"},...],"edges":[[u,v],...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object")
    raw_vertices = data.get("vertices")
    raw_edges = data.get("edges", [])
    if not isinstance(raw_vertices, list):
        raise GraphError('graph JSON needs a "vertices" list')
    if not isinstance(raw_edges, list):
        raise GraphError('"edges" must be a list')
    ids, kinds = [], {}
    for entry in raw_vertices:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), int):
            raise GraphError('each vertex needs an integer "id"')
        ids.append(entry["id"])
        kinds[entry["id"]] = entry.get("kind", IMAGINARY)
    edges = []
    for e in raw_edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) for x in e)):
            raise GraphError(f"edge {e!r} must be a pair of integer vertex ids")
        edges.append((e[0], e[1]))
    return new_graph(ids, kinds, edges)


def graph_to_json(g: Graph) -> str:
    return json.dumps({
        "vertices": [{"id": v, "kind": g.kind(v)} for v in g.vertices],
        "edges": [list(e) for e in sorted(g.edges)],
    })
