#!/usr/bin/env python3
"""Tour of the rank machinery behind the deletion solvers.

Builds a small bipartite graph, evaluates the rank and dual rank on a
few edge sets, and demonstrates the two structural facts the solvers
rely on: an edge set is a matching exactly when its subgraph is claw
free, and it is a matching exactly when its complement spans the dual.
"""

from itertools import chain, combinations

from clawdel import (
    BipartiteGraph,
    PolymatroidContext,
    dual_rank,
    dual_rank_from_definition,
    find_claw,
    incident_edges,
    is_matching,
    is_spanning_dual,
    rank,
)


def subsets(edges):
    edges = sorted(edges)
    return chain.from_iterable(combinations(edges, k) for k in range(len(edges) + 1))


def main():
    # A = {1, 2}, B = {3, 4, 5, 6}; vertex 1 has degree 4, vertex 2 degree 3
    g = BipartiteGraph(
        2, 4,
        frozenset({(1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5)}),
        t=3,
    )
    ctx = PolymatroidContext(g)
    print(f"graph: |A| = {g.n_a}, |B| = {g.n_b}, |E| = {len(g.edges)}, t = {g.t}")
    print(f"active A-vertices (degree >= t): {sorted(ctx.active_a)}")
    print()

    print("rank grows by 2 per edge until a vertex saturates at t - 1 edges:")
    star = sorted(incident_edges(g, 1))
    for k in range(len(star) + 1):
        print(f"  rank of first {k} edges at vertex 1 -> {rank(ctx, star[:k])}")
    print()

    print("dual rank: closed form vs the defining expression")
    for edge_set, label in [
        (ctx.edges, "all edges"),
        (incident_edges(g, 3), "edges at vertex 3"),
        (incident_edges(g, 1), "edges at vertex 1"),
    ]:
        closed = dual_rank(ctx, edge_set)
        generic = dual_rank_from_definition(ctx, edge_set)
        print(f"  {label:22s} closed {closed:3d}   generic {generic:3d}")
    print()

    print("matching <=> claw-free subgraph, and matching <=> complement spans the dual:")
    agree = both = 0
    for f in subsets(g.edges):
        fs = frozenset(f)
        matching = is_matching(ctx, fs)
        claw_free = find_claw(BipartiteGraph(g.n_a, g.n_b, fs, g.t)) is None
        spanning = is_spanning_dual(ctx, ctx.edges - fs)
        assert matching == claw_free == spanning
        agree += 1
        both += matching
    print(f"  checked {agree} edge subsets; {both} of them are matchings")


if __name__ == "__main__":
    main()
