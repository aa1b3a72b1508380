"""Seeded random instance generators.

Every family is a pure function of (spec, seed): the generator draws
from a Mersenne Twister (the stdlib `random.Random`) in a fixed order,
structure first, then weights in vertex id order, so identical specs
serialize to identical bytes. Rejection-sampled families retry up to
RETRY_CAP times before giving up.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graphs import BipartiteGraph, Edge, Hypergraph, SplitGraph

RETRY_CAP = 10_000

FAMILIES = ("bip-random", "bip-dense", "hyp-uniform", "regular-graph", "split-random")


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    `sizes` holds the family-specific counts: na/nb/m for bip-random,
    na/nb for bip-dense, n/m for hyp-uniform, n for regular-graph,
    nc/ni/m for split-random. For regular-graph, `t` is the degree of
    every vertex; elsewhere it is the claw parameter. `weight_mode` is
    ("unit",) or ("uniform", lo, hi) for integer weights drawn
    uniformly per vertex.
    """

    family: str
    t: int
    seed: int
    sizes: Mapping[str, int]
    weight_mode: tuple = ("unit",)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "sizes", dict(self.sizes))
        mode = self.weight_mode
        if mode[0] == "unit":
            pass
        elif mode[0] == "uniform":
            if len(mode) != 3 or not (0 <= mode[1] <= mode[2]):
                raise ValueError(f"bad weight mode {mode!r}")
        else:
            raise ValueError(f"bad weight mode {mode!r}")

    def size(self, key: str) -> int:
        try:
            value = self.sizes[key]
        except KeyError:
            raise ValueError(f"family {self.family!r} needs size {key!r}") from None
        if value < 0:
            raise ValueError(f"size {key!r} must be nonnegative")
        return value


def provenance(spec: GenSpec) -> str:
    """Header comment recording exactly how an instance was produced."""
    sizes = " ".join(f"{k}={spec.sizes[k]}" for k in sorted(spec.sizes))
    mode = spec.weight_mode
    weights = "unit" if mode[0] == "unit" else f"uniform:{mode[1]}:{mode[2]}"
    return (
        f"gen {spec.family} seed={spec.seed} t={spec.t} {sizes} "
        f"weights={weights} rng=mersenne-twister"
    )


def _draw_weights(rng: random.Random, spec: GenSpec, n_total: int) -> dict[int, Fraction]:
    if spec.weight_mode[0] == "unit":
        return {}
    _, lo, hi = spec.weight_mode
    return {v: Fraction(rng.randint(lo, hi)) for v in range(1, n_total + 1)}


def _bip_random(rng: random.Random, spec: GenSpec) -> BipartiteGraph:
    na, nb, m = spec.size("na"), spec.size("nb"), spec.size("m")
    pairs = [(a, na + b) for a in range(1, na + 1) for b in range(1, nb + 1)]
    if m > len(pairs):
        raise ValueError(f"cannot place {m} edges in a {na}x{nb} bipartite graph")
    edges = frozenset(rng.sample(pairs, m))
    return BipartiteGraph(na, nb, edges, spec.t, _draw_weights(rng, spec, na + nb))


def _bip_dense(rng: random.Random, spec: GenSpec) -> BipartiteGraph:
    na, nb = spec.size("na"), spec.size("nb")
    dmin = 2 * (spec.t - 1)
    if nb < dmin:
        raise ValueError(f"dense family needs nb >= 2(t-1) = {dmin}, got {nb}")
    edges: set[Edge] = set()
    b_ids = list(range(na + 1, na + nb + 1))
    for a in range(1, na + 1):
        deg = rng.randint(dmin, nb)
        edges.update((a, b) for b in rng.sample(b_ids, deg))
    return BipartiteGraph(na, nb, frozenset(edges), spec.t, _draw_weights(rng, spec, na + nb))


def _hyp_uniform(rng: random.Random, spec: GenSpec) -> Hypergraph:
    n, m, t = spec.size("n"), spec.size("m"), spec.t
    if n < 2 * t or m < 2:
        raise ValueError(
            "disjoint-counterpart property needs n >= 2t and m >= 2 "
            f"(got n={n}, m={m}, t={t})"
        )
    population = list(range(1, n + 1))
    for _ in range(RETRY_CAP):
        seen: set[frozenset[int]] = set()
        hyperedges: list[tuple[int, ...]] = []
        attempts = 0
        while len(hyperedges) < m and attempts < RETRY_CAP:
            attempts += 1
            e = tuple(sorted(rng.sample(population, t)))
            if frozenset(e) in seen:
                continue
            seen.add(frozenset(e))
            hyperedges.append(e)
        if len(hyperedges) < m:
            continue
        if all(
            any(set(e).isdisjoint(f) for f in hyperedges if f is not e)
            for e in hyperedges
        ):
            return Hypergraph(n, t, tuple(hyperedges))
    raise ValueError("retry budget exhausted while sampling a uniform hypergraph")


def _regular_graph(rng: random.Random, spec: GenSpec) -> Hypergraph:
    n, deg = spec.size("n"), spec.t
    if deg < 1 or n <= deg:
        raise ValueError(f"no simple {deg}-regular graph on {n} vertices")
    if (n * deg) % 2 != 0:
        raise ValueError(f"no {deg}-regular graph on {n} vertices: odd n*t")
    for _ in range(RETRY_CAP):
        stubs = [v for v in range(1, n + 1) for _ in range(deg)]
        rng.shuffle(stubs)
        pairs = list(zip(stubs[::2], stubs[1::2]))
        edges = {tuple(sorted(p)) for p in pairs}
        if len(edges) == len(pairs) and all(u != v for u, v in pairs):
            return Hypergraph(n, 2, tuple(sorted(edges)))
    raise ValueError("retry budget exhausted while pairing a regular graph")


def _split_random(rng: random.Random, spec: GenSpec) -> SplitGraph:
    nc, ni, m = spec.size("nc"), spec.size("ni"), spec.size("m")
    pairs = [(c, nc + i) for c in range(1, nc + 1) for i in range(1, ni + 1)]
    if m > len(pairs):
        raise ValueError(f"cannot place {m} cross edges in a {nc}x{ni} split graph")
    edges = frozenset(rng.sample(pairs, m))
    return SplitGraph(nc, ni, edges, spec.t, _draw_weights(rng, spec, nc + ni))


_BUILDERS = {
    "bip-random": _bip_random,
    "bip-dense": _bip_dense,
    "hyp-uniform": _hyp_uniform,
    "regular-graph": _regular_graph,
    "split-random": _split_random,
}


def generate(spec: GenSpec) -> BipartiteGraph | SplitGraph | Hypergraph:
    """Generate the instance described by `spec`, deterministically."""
    rng = random.Random(spec.seed)
    return _BUILDERS[spec.family](rng, spec)
