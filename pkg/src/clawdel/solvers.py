"""Deletion solvers: primal-dual, local-ratio, max-subgraph, split wrapper.

The primal-dual solver follows the covering program whose constraint
for a vertex subset S reads

    sum over v in S of dual_rank_incident(v, S) * x_v  >=  dual_rank(E[S]),

with one dual variable per subset. Only the current active set is ever
raised, so the dual is recorded as a sequence of (active set, raise
amount, tightened vertex) steps. All arithmetic is exact rationals; no
floating point touches any solver path.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import reductions
from .claws import find_claw, find_claw_split, reverse_delete
from .graphs import BipartiteGraph, SplitGraph, incident_edges
from .polymatroid import PolymatroidContext, dual_rank, incidence_dual_ranks


@dataclass(frozen=True)
class TraceStep:
    """One dual raise: the active set, the raise amount, the vertex made tight."""

    active: tuple[int, ...]
    amount: Fraction
    selected: int


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solver run.

    `cost` is the weight of `solution`; `dual_lower_bound` is a valid
    lower bound on the optimum established during the run; `theta` is
    the certificate sum(dual_rank(delta(v)) for v in solution) /
    dual_rank(E) on the whole graph, or None where undefined.
    """

    solution: tuple[int, ...]
    cost: Fraction
    dual_lower_bound: Fraction
    theta: Fraction | None
    algorithm: str
    iterations: int
    elapsed_s: float


class ShadowMismatchError(RuntimeError):
    """A split solution verified on the cross-edge shadow fails on the split graph.

    Raised when the bipartite shadow of a split graph is solved and the
    resulting set still leaves a claw in the split graph; such a claw
    necessarily uses a clique vertex as a leaf.
    """

    def __init__(self, solution: tuple[int, ...], witness) -> None:
        self.solution = solution
        self.witness = witness
        super().__init__(
            f"shadow solution {list(solution)} leaves a split claw with center "
            f"{witness.center} and leaves {list(witness.leaves)}"
        )


def theta_of_solution(g: BipartiteGraph, solution: Iterable[int]) -> Fraction:
    """Certificate ratio for a minimal feasible set on the whole graph.

    Returns sum(dual_rank(delta(v))) / dual_rank(E). A claw-free graph
    has dual_rank(E) = 0; the ratio is then 0 for the empty solution
    and undefined (ValueError) otherwise.
    """
    ctx = PolymatroidContext(g)
    total = dual_rank(ctx, ctx.edges)
    sol = sorted(set(solution))
    if total == 0:
        if not sol:
            return Fraction(0)
        raise ValueError("theta undefined: graph is claw free but solution is nonempty")
    numer = sum(dual_rank(ctx, incident_edges(g, v)) for v in sol)
    return Fraction(numer, total)


def primal_dual_solve(g: BipartiteGraph) -> tuple[SolveReport, list[TraceStep]]:
    """Primal-dual deletion solver with reverse deletion.

    Each iteration raises the dual variable of the current active set S
    until some vertex's constraint becomes tight (ties to the lowest
    id; zero-weight vertices with a positive coefficient are tight at a
    zero raise), moves that vertex into the preliminary solution and
    out of S, and repeats while the preliminary solution is infeasible.
    Reverse deletion then prunes the preliminary solution to a minimal
    one.
    """
    started = time.perf_counter()
    residual = {v: g.weight(v) for v in g.vertices}
    active: list[int] = list(g.vertices)
    selected: list[int] = []
    trace: list[TraceStep] = []
    dual_lb = Fraction(0)

    while find_claw(g, selected) is not None:
        ctx = PolymatroidContext(g, frozenset(active))
        coeff = incidence_dual_ranks(ctx)
        prices = [(Fraction(residual[v], coeff[v]), v) for v in active if coeff[v] > 0]
        eps, tight = min(prices)
        for v in active:
            if coeff[v] > 0:
                residual[v] -= eps * coeff[v]
        dual_lb += eps * dual_rank(ctx, ctx.edges)
        trace.append(TraceStep(active=tuple(active), amount=eps, selected=tight))
        selected.append(tight)
        active.remove(tight)

    solution = reverse_delete(g, selected)
    cost = g.total_weight(solution)
    report = SolveReport(
        solution=tuple(sorted(solution)),
        cost=cost,
        dual_lower_bound=dual_lb,
        theta=theta_of_solution(g, solution),
        algorithm="primal-dual",
        iterations=len(trace),
        elapsed_s=time.perf_counter() - started,
    )
    return report, trace


def local_ratio_solve(g: BipartiteGraph) -> SolveReport:
    """Local-ratio baseline: repeatedly zero out a surviving claw.

    Subtracts the minimum residual weight over the t + 1 vertices of a
    claw witness from all of them and collects the vertices that reach
    zero, then prunes with reverse deletion. The sum of the subtracted
    amounts is a valid lower bound on the optimum, so the cost is at
    most (t + 1) times it.
    """
    started = time.perf_counter()
    residual = {v: g.weight(v) for v in g.vertices}
    selected: list[int] = []
    chosen: set[int] = set()
    rounds = 0
    lower = Fraction(0)

    while (witness := find_claw(g, selected)) is not None:
        verts = witness.vertices
        eps = min(residual[v] for v in verts)
        lower += eps
        rounds += 1
        for v in verts:
            residual[v] -= eps
            if residual[v] == 0 and v not in chosen:
                chosen.add(v)
                selected.append(v)

    solution = reverse_delete(g, selected)
    return SolveReport(
        solution=tuple(sorted(solution)),
        cost=g.total_weight(solution),
        dual_lower_bound=lower,
        theta=theta_of_solution(g, solution),
        algorithm="local-ratio",
        iterations=rounds,
        elapsed_s=time.perf_counter() - started,
    )


def exact_solve(g: BipartiteGraph) -> SolveReport:
    """Exact minimum-weight deletion, packaged like the other solvers.

    The oracle's minimum set is pruned to a minimal one (only
    zero-weight vertices can ever be dropped, so the cost is still the
    optimum), and the reported lower bound is the optimum itself.
    """
    from .oracle import exact_min_deletion_set

    started = time.perf_counter()
    raw, _ = exact_min_deletion_set(g)
    minimal = reverse_delete(g, list(raw))
    return SolveReport(
        solution=tuple(sorted(minimal)),
        cost=g.total_weight(minimal),
        dual_lower_bound=g.total_weight(minimal),
        theta=theta_of_solution(g, minimal),
        algorithm="exact",
        iterations=0,
        elapsed_s=time.perf_counter() - started,
    )


def max_subgraph_solve(g: BipartiteGraph) -> tuple[tuple[int, ...], Fraction]:
    """Heaviest claw-free induced subgraph among V minus S, A, and B.

    S comes from the primal-dual solver. Both sides are claw free on
    their own, so the winner always induces a claw-free subgraph. Ties
    prefer V minus S, then A.
    """
    report, _ = primal_dual_solve(g)
    deleted = set(report.solution)
    remainder = [v for v in g.vertices if v not in deleted]
    candidates = [remainder, list(g.a_side), list(g.b_side)]
    best = max(range(3), key=lambda i: (g.total_weight(candidates[i]), -i))
    pick = candidates[best]
    return tuple(sorted(pick)), g.total_weight(pick)


def split_max_subgraph(h: SplitGraph) -> tuple[tuple[int, ...], Fraction]:
    """Split-graph analogue of `max_subgraph_solve`.

    The clique side has no induced claws at all and the independent
    side has no edges, so both are always usable candidates.
    """
    report = split_solve(h, "primal-dual")
    deleted = set(report.solution)
    remainder = [v for v in h.vertices if v not in deleted]
    candidates = [remainder, list(h.clique_side), list(h.indep_side)]
    best = max(range(3), key=lambda i: (h.total_weight(candidates[i]), -i))
    pick = candidates[best]
    return tuple(sorted(pick)), h.total_weight(pick)


def split_solve(h: SplitGraph, algorithm: str = "primal-dual") -> SolveReport:
    """Solve a split instance through its cross-edge bipartite shadow.

    Runs the requested algorithm ("primal-dual", "local-ratio" or
    "exact") on the shadow and re-verifies the returned set on the
    split graph itself. A verification failure raises
    ShadowMismatchError: the split graph then contains a claw that uses
    a clique vertex as a leaf and is invisible in the shadow.
    """
    shadow, _ = reductions.to_bipartite(h)
    if algorithm == "primal-dual":
        report, _ = primal_dual_solve(shadow)
    elif algorithm == "local-ratio":
        report = local_ratio_solve(shadow)
    elif algorithm == "exact":
        report = exact_solve(shadow)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")

    witness = find_claw_split(h, report.solution)
    if witness is not None:
        raise ShadowMismatchError(report.solution, witness)
    return report
