"""Claw detection, feasibility, minimality, reverse deletion.

A t-claw is an induced K_{1,t}; its degree-t vertex is the center. In a
bipartite graph only claws with the center on the A side count, so a
claw exists exactly when some surviving A-vertex keeps t or more
surviving neighbors. In a split graph every claw is centered at a
clique vertex and its t leaves must be pairwise nonadjacent, which
allows at most one clique vertex among them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import BipartiteGraph, SplitGraph


@dataclass(frozen=True)
class ClawWitness:
    """Center plus t leaves certifying that a deletion set is infeasible."""

    center: int
    leaves: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted((self.center, *self.leaves)))


def find_claw(g: BipartiteGraph, removed: Iterable[int] = ()) -> ClawWitness | None:
    """First one-sided claw surviving the removal of `removed`, if any.

    Deterministic: lowest-indexed center, then lowest-indexed leaves.
    """
    gone = set(removed)
    for a in g.a_side:
        if a in gone:
            continue
        alive = [b for b in g.adj[a] if b not in gone]
        if len(alive) >= g.t:
            return ClawWitness(a, tuple(alive[: g.t]))
    return None


def find_claw_split(h: SplitGraph, removed: Iterable[int] = ()) -> ClawWitness | None:
    """First claw surviving in the split graph, if any.

    A leaf set is either t independent-side neighbors of the center, or
    one other clique vertex plus t - 1 independent-side neighbors the
    clique leaf is not adjacent to. Deterministic: lowest center first,
    then the lexicographically smallest sorted leaf tuple.
    """
    gone = set(removed)
    clique_alive = [c for c in h.clique_side if c not in gone]
    for c in clique_alive:
        ind = [b for b in h.adj[c] if b not in gone]
        candidates: list[tuple[int, ...]] = []
        if len(ind) >= h.t:
            candidates.append(tuple(ind[: h.t]))
        if len(ind) >= h.t - 1:
            for c2 in clique_alive:
                if c2 == c:
                    continue
                c2_nbrs = set(h.adj[c2])
                avail = [b for b in ind if b not in c2_nbrs]
                if len(avail) >= h.t - 1:
                    candidates.append(tuple(sorted([c2] + avail[: h.t - 1])))
        if candidates:
            return ClawWitness(c, min(candidates))
    return None


def _find(g: BipartiteGraph | SplitGraph, removed: Iterable[int]) -> ClawWitness | None:
    if isinstance(g, BipartiteGraph):
        return find_claw(g, removed)
    if isinstance(g, SplitGraph):
        return find_claw_split(g, removed)
    raise TypeError(f"expected a bipartite or split graph, got {type(g).__name__}")


def is_feasible(g: BipartiteGraph | SplitGraph, solution: Iterable[int]) -> bool:
    """True iff removing `solution` leaves the graph claw free."""
    return _find(g, solution) is None


def is_minimal(g: BipartiteGraph | SplitGraph, solution: Iterable[int]) -> bool:
    """True iff `solution` is feasible and no proper subset is.

    Raises ValueError when `solution` is not feasible to begin with.
    """
    sol = set(solution)
    if not is_feasible(g, sol):
        raise ValueError("solution is not feasible")
    for v in sorted(sol):
        if is_feasible(g, sol - {v}):
            return False
    return True


def reverse_delete(g: BipartiteGraph | SplitGraph, ordered: Sequence[int]) -> list[int]:
    """Prune `ordered` (in addition order) down to a minimal feasible set.

    Scans in reverse addition order and drops every vertex whose removal
    keeps the set feasible. Raises ValueError when the input itself is
    infeasible.
    """
    kept = set(ordered)
    if not is_feasible(g, kept):
        raise ValueError("reverse deletion requires a feasible input set")
    for v in reversed(ordered):
        if is_feasible(g, kept - {v}):
            kept.discard(v)
    return [v for v in ordered if v in kept]
