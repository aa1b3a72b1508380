"""Core graph types: weighted bipartite graphs, split graphs, hypergraphs.

Vertex ids are 1-based. Bipartite graphs put the A side first (ids
1..nA) and the B side directly after it (ids nA+1..nA+nB); split graphs
do the same with the clique side first. Vertex weights are exact
nonnegative rationals; weight 1 is the default and is never stored.

All types are immutable after construction and safe to share across
threads. Derived adjacency is precomputed once, sorted, so every
traversal in the package is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

Edge = tuple[int, int]

_ONE = Fraction(1)


def _canonical_weights(weights: Mapping[int, object] | None, n_total: int) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for v, raw in (weights or {}).items():
        if not 1 <= v <= n_total:
            raise ValueError(f"weight for unknown vertex {v}")
        w = Fraction(raw)
        if w < 0:
            raise ValueError(f"negative weight for vertex {v}")
        if w != 1:
            out[v] = w
    return out


def _sorted_adjacency(n_total: int, edges: Iterable[Edge]) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {v: [] for v in range(1, n_total + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return {v: tuple(sorted(ns)) for v, ns in adj.items()}


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with A-side ids 1..n_a and B-side ids n_a+1..n_a+n_b.

    `edges` holds (a, b) pairs, `t` is the claw parameter (>= 3), and
    `weights` maps vertex ids to nonnegative rationals (missing = 1).
    """

    n_a: int
    n_b: int
    edges: frozenset[Edge]
    t: int
    weights: Mapping[int, object] | None = None
    adj: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.t < 3:
            raise ValueError(f"claw parameter t must be >= 3, got {self.t}")
        if self.n_a < 0 or self.n_b < 0:
            raise ValueError("side sizes must be nonnegative")
        edges = frozenset((int(a), int(b)) for a, b in self.edges)
        for a, b in edges:
            if not 1 <= a <= self.n_a:
                raise ValueError(f"A-side index {a} out of range 1..{self.n_a}")
            if not self.n_a + 1 <= b <= self.n_a + self.n_b:
                raise ValueError(
                    f"B-side index {b} out of range {self.n_a + 1}..{self.n_a + self.n_b}"
                )
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "weights", _canonical_weights(self.weights, self.n_vertices))
        object.__setattr__(self, "adj", _sorted_adjacency(self.n_vertices, edges))

    @property
    def n_vertices(self) -> int:
        return self.n_a + self.n_b

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    @property
    def a_side(self) -> range:
        return range(1, self.n_a + 1)

    @property
    def b_side(self) -> range:
        return range(self.n_a + 1, self.n_vertices + 1)

    def weight(self, v: int) -> Fraction:
        return self.weights.get(v, _ONE)

    def total_weight(self, vs: Iterable[int]) -> Fraction:
        return sum((self.weight(v) for v in vs), start=Fraction(0))


@dataclass(frozen=True)
class SplitGraph:
    """Split graph: clique side ids 1..n_clique, independent side after it.

    Only cross edges (clique id, independent id) are stored; every pair
    of clique vertices is implicitly adjacent and the independent side
    has no internal edges.
    """

    n_clique: int
    n_indep: int
    cross_edges: frozenset[Edge]
    t: int
    weights: Mapping[int, object] | None = None
    adj: dict[int, tuple[int, ...]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.t < 3:
            raise ValueError(f"claw parameter t must be >= 3, got {self.t}")
        if self.n_clique < 0 or self.n_indep < 0:
            raise ValueError("side sizes must be nonnegative")
        cross = frozenset((int(c), int(i)) for c, i in self.cross_edges)
        for c, i in cross:
            if not 1 <= c <= self.n_clique:
                raise ValueError(f"clique index {c} out of range 1..{self.n_clique}")
            if not self.n_clique + 1 <= i <= self.n_vertices:
                raise ValueError(
                    f"independent index {i} out of range {self.n_clique + 1}..{self.n_vertices}"
                )
        object.__setattr__(self, "cross_edges", cross)
        object.__setattr__(self, "weights", _canonical_weights(self.weights, self.n_vertices))
        object.__setattr__(self, "adj", _sorted_adjacency(self.n_vertices, cross))

    @property
    def n_vertices(self) -> int:
        return self.n_clique + self.n_indep

    @property
    def vertices(self) -> range:
        return range(1, self.n_vertices + 1)

    @property
    def clique_side(self) -> range:
        return range(1, self.n_clique + 1)

    @property
    def indep_side(self) -> range:
        return range(self.n_clique + 1, self.n_vertices + 1)

    def cross_neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def weight(self, v: int) -> Fraction:
        return self.weights.get(v, _ONE)

    def total_weight(self, vs: Iterable[int]) -> Fraction:
        return sum((self.weight(v) for v in vs), start=Fraction(0))


@dataclass(frozen=True)
class Hypergraph:
    """t-uniform hypergraph on vertices 1..n.

    Hyperedges keep their list order; vertices inside each edge are
    stored ascending. Duplicate edges are rejected.
    """

    n: int
    t: int
    hyperedges: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.t < 2:
            raise ValueError(f"uniformity must be >= 2, got {self.t}")
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[frozenset[int]] = set()
        normalized = []
        for e in self.hyperedges:
            vs = tuple(sorted(int(v) for v in e))
            if len(set(vs)) != self.t or len(vs) != self.t:
                raise ValueError(f"hyperedge {e} does not have exactly {self.t} distinct vertices")
            for v in vs:
                if not 1 <= v <= self.n:
                    raise ValueError(f"hyperedge vertex {v} out of range 1..{self.n}")
            key = frozenset(vs)
            if key in seen:
                raise ValueError(f"duplicate hyperedge {vs}")
            seen.add(key)
            normalized.append(vs)
        object.__setattr__(self, "hyperedges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.hyperedges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)


def vertex_degrees(hy: Hypergraph) -> dict[int, int]:
    """Number of hyperedges each vertex of `hy` lies in."""
    deg = {v: 0 for v in hy.vertices}
    for e in hy.hyperedges:
        for v in e:
            deg[v] += 1
    return deg


def degree(g: BipartiteGraph, v: int, restricted_to: Iterable[Edge] | None = None) -> int:
    """Degree of `v`, optionally counted only inside an edge subset."""
    if v not in g.vertices:
        raise ValueError(f"vertex {v} out of range")
    if restricted_to is None:
        return len(g.adj[v])
    count = 0
    for e in set(restricted_to):
        if e not in g.edges:
            raise ValueError(f"foreign edge {e}")
        if v in e:
            count += 1
    return count


def incident_edges(g: BipartiteGraph, v: int) -> frozenset[Edge]:
    """All edges of `g` incident on `v`."""
    if v not in g.vertices:
        raise ValueError(f"vertex {v} out of range")
    if v <= g.n_a:
        return frozenset((v, b) for b in g.adj[v])
    return frozenset((a, v) for a in g.adj[v])


def incident_edges_within(g: BipartiteGraph, v: int, subset: Iterable[int]) -> frozenset[Edge]:
    """Edges from `v` to the rest of `subset`; `v` must lie in `subset`."""
    vs = set(subset)
    if v not in vs:
        raise ValueError(f"vertex {v} not in the given subset")
    if v <= g.n_a:
        return frozenset((v, b) for b in g.adj[v] if b in vs)
    return frozenset((a, v) for a in g.adj[v] if a in vs)


def induced_edges(g: BipartiteGraph, subset: Iterable[int]) -> frozenset[Edge]:
    """Edges of `g` with both endpoints in `subset`."""
    vs = set(subset)
    return frozenset((a, b) for a, b in g.edges if a in vs and b in vs)
