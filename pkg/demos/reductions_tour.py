#!/usr/bin/env python3
"""The three instance constructions, checked against the exact oracle.

1. Hypergraph vertex cover -> bipartite deletion: the optima coincide,
   and the oracle confirms it.
2. Bipartite <-> split completion: the two directions are inverses; the
   completion can, however, contain claws that use a clique vertex as a
   leaf and are invisible in the cross-edge shadow. This demo exhibits
   the smallest such disagreement.
3. Vertex cover on a regular graph -> dense bipartite instance: every
   constructed left vertex has degree exactly 2(t - 1), but the pad
   group alone is already a feasible deletion set, so the constructed
   optimum is the pad size rather than pad size + cover size.
"""

from itertools import combinations

from clawdel import (
    BipartiteGraph,
    Hypergraph,
    degree,
    exact_min_deletion_set,
    exact_min_vc_graph,
    exact_min_vc_hypergraph,
    find_claw_split,
    from_hypergraph_cover,
    from_regular_graph_cover,
    is_feasible,
    map_solution,
    to_bipartite,
    to_split,
)


def main():
    print("== hypergraph cover to one-sided deletion ==")
    hy = Hypergraph(6, 3, ((1, 2, 3), (3, 4, 5), (4, 5, 6)))
    built, rmap = from_hypergraph_cover(hy)
    cover, vc = exact_min_vc_hypergraph(hy)
    deleted, opt = exact_min_deletion_set(built)
    print(f"hypergraph: n = {hy.n}, m = {hy.m}; built: |A| = {built.n_a}, |B| = {built.n_b}")
    print(f"min vertex cover {list(cover)} (size {vc}); built optimum {opt}")
    print(f"cover mapped forward: {list(map_solution(rmap, 'forward', cover))}")
    print()

    print("== bipartite <-> split completion ==")
    g = BipartiteGraph(2, 2, frozenset({(1, 3), (1, 4)}), 3)
    h, _ = to_split(g)
    back, _ = to_bipartite(h)
    print(f"round trip returns the original: {back == g}")
    print(f"shadow feasible with nothing deleted: {is_feasible(g, ())}")
    witness = find_claw_split(h)
    print(f"split graph claw after completion: center {witness.center}, "
          f"leaves {list(witness.leaves)}")
    print("leaf", witness.leaves[0], "is a clique vertex: the completion is strictly",
          "harder than its shadow on this instance")
    print()

    print("== regular-graph cover to dense instance ==")
    k4 = Hypergraph(4, 2, tuple(tuple(e) for e in combinations(range(1, 5), 2)))
    dense, dmap = from_regular_graph_cover(k4)
    degrees = {degree(dense, a) for a in dense.a_side}
    _, vc4 = exact_min_vc_graph(k4)
    _, opt4 = exact_min_deletion_set(dense)
    lo, hi = dmap.group("P")
    print(f"built from K_4: |A| = {dense.n_a}, |B| = {dense.n_b}, "
          f"left degrees {sorted(degrees)} = 2(t-1)")
    print(f"pad group P = {list(range(lo, hi + 1))} (size {dmap.offset}); "
          f"min vertex cover of K_4 = {vc4}")
    print(f"intended optimum {dmap.offset + vc4}; actual optimum {opt4}")
    print(f"the pad group alone is feasible: {is_feasible(dense, range(lo, hi + 1))}")


if __name__ == "__main__":
    main()
