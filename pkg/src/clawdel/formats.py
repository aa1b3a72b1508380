"""Text formats for problem instances.

The three formats share one set of conventions: UTF-8, "\\n" line ends,
"#" comment lines and blank lines are ignored, ids are 1-based.

    p bip <nA> <nB> <m> <t>      bipartite header
    p split <nC> <nI> <m> <t>    split header (cross edges only)
    p hyp <n> <m> <t>            t-uniform hypergraph header
    n <id> <weight>              optional weight line, weight "k" or "p/q"
    e <u> <v>                    edge / cross edge, exactly m lines
    h <v1> ... <vt>              hyperedge, exactly m lines

Serialization is canonical: comment lines first, then the header, then
weight lines for non-unit weights in id order, then edges in sorted
order. Hyperedges keep their list order with vertices ascending inside
each. For every graph g, parse(serialize(g)) == g, and serialization is
the normal form of the format: serialize(parse(s)) == s whenever s is
already canonical.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterator

from .graphs import BipartiteGraph, Hypergraph, SplitGraph

_WEIGHT_RE = re.compile(r"^[0-9]+(/[1-9][0-9]*)?$")


class ParseError(ValueError):
    """Malformed instance text; carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def _lines(text: str | bytes) -> Iterator[tuple[int, list[str]]]:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not valid UTF-8: {exc}") from exc
    for line_no, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield line_no, stripped.split()


def _int_field(token: str, what: str, line_no: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {token!r}", line_no) from None


def _parse_header(tokens: list[str], line_no: int, kind: str, n_fields: int) -> list[int]:
    if len(tokens) != 2 + n_fields or tokens[0] != "p" or tokens[1] != kind:
        raise ParseError(f"expected header 'p {kind}' with {n_fields} counts", line_no)
    values = [_int_field(tok, "header field", line_no) for tok in tokens[2:]]
    if any(v < 0 for v in values):
        raise ParseError("header counts must be nonnegative", line_no)
    return values


def _parse_weight(token: str, line_no: int) -> Fraction:
    if not _WEIGHT_RE.match(token):
        raise ParseError(f"bad weight {token!r} (expected 'k' or 'p/q')", line_no)
    return Fraction(token)


def _parse_pair_body(
    rows: list[tuple[int, list[str]]],
    m: int,
    n_total: int,
    lo_hint: str,
    hi_hint: str,
    first_range: range,
    second_range: range,
) -> tuple[set[tuple[int, int]], dict[int, Fraction]]:
    edges: set[tuple[int, int]] = set()
    weights: dict[int, Fraction] = {}
    for line_no, tokens in rows:
        if tokens[0] == "n":
            if len(tokens) != 3:
                raise ParseError("weight line needs 'n <id> <weight>'", line_no)
            v = _int_field(tokens[1], "vertex id", line_no)
            if not 1 <= v <= n_total:
                raise ParseError(f"vertex id {v} out of range 1..{n_total}", line_no)
            if v in weights:
                raise ParseError(f"duplicate weight for vertex {v}", line_no)
            weights[v] = _parse_weight(tokens[2], line_no)
        elif tokens[0] == "e":
            if len(tokens) != 3:
                raise ParseError("edge line needs 'e <u> <v>'", line_no)
            u = _int_field(tokens[1], "edge endpoint", line_no)
            v = _int_field(tokens[2], "edge endpoint", line_no)
            if u not in first_range:
                raise ParseError(f"index {u} out of {lo_hint} range", line_no)
            if v not in second_range:
                raise ParseError(f"index {v} out of {hi_hint} range", line_no)
            if (u, v) in edges:
                raise ParseError(f"duplicate edge ({u}, {v})", line_no)
            edges.add((u, v))
        else:
            raise ParseError(f"unknown line kind {tokens[0]!r}", line_no)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were listed")
    return edges, weights


def parse_bipartite(text: str | bytes) -> BipartiteGraph:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty input, expected a 'p bip' header")
    line_no, tokens = rows[0]
    n_a, n_b, m, t = _parse_header(tokens, line_no, "bip", 4)
    edges, weights = _parse_pair_body(
        rows[1:], m, n_a + n_b, "A-side", "B-side",
        range(1, n_a + 1), range(n_a + 1, n_a + n_b + 1),
    )
    try:
        return BipartiteGraph(n_a, n_b, frozenset(edges), t, weights)
    except ValueError as exc:
        raise ParseError(str(exc), line_no) from exc


def parse_split(text: str | bytes) -> SplitGraph:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty input, expected a 'p split' header")
    line_no, tokens = rows[0]
    n_c, n_i, m, t = _parse_header(tokens, line_no, "split", 4)
    edges, weights = _parse_pair_body(
        rows[1:], m, n_c + n_i, "clique-side", "independent-side",
        range(1, n_c + 1), range(n_c + 1, n_c + n_i + 1),
    )
    try:
        return SplitGraph(n_c, n_i, frozenset(edges), t, weights)
    except ValueError as exc:
        raise ParseError(str(exc), line_no) from exc


def parse_hypergraph(text: str | bytes) -> Hypergraph:
    rows = list(_lines(text))
    if not rows:
        raise ParseError("empty input, expected a 'p hyp' header")
    header_line, tokens = rows[0]
    n, m, t = _parse_header(tokens, header_line, "hyp", 3)
    if t < 2:
        raise ParseError(f"uniformity must be >= 2, got {t}", header_line)
    hyperedges: list[tuple[int, ...]] = []
    seen: set[frozenset[int]] = set()
    for line_no, toks in rows[1:]:
        if toks[0] != "h":
            raise ParseError(f"unknown line kind {toks[0]!r}", line_no)
        if len(toks) != 1 + t:
            raise ParseError(f"hyperedge line needs exactly {t} vertex ids", line_no)
        vs = tuple(sorted(_int_field(tok, "hyperedge vertex", line_no) for tok in toks[1:]))
        if len(set(vs)) != t:
            raise ParseError("hyperedge vertices must be distinct", line_no)
        for v in vs:
            if not 1 <= v <= n:
                raise ParseError(f"vertex id {v} out of range 1..{n}", line_no)
        key = frozenset(vs)
        if key in seen:
            raise ParseError(f"duplicate hyperedge {vs}", line_no)
        seen.add(key)
        hyperedges.append(vs)
    if len(hyperedges) != m:
        raise ParseError(f"header declares {m} hyperedges but {len(hyperedges)} were listed")
    return Hypergraph(n, t, tuple(hyperedges))


def _comment_block(comments: tuple[str, ...] | list[str]) -> list[str]:
    return [f"# {c}" for c in comments]


def _weight_lines(weights: dict[int, Fraction]) -> list[str]:
    return [f"n {v} {weights[v]}" for v in sorted(weights)]


def serialize_bipartite(g: BipartiteGraph, comments: tuple[str, ...] | list[str] = ()) -> str:
    lines = _comment_block(comments)
    lines.append(f"p bip {g.n_a} {g.n_b} {len(g.edges)} {g.t}")
    lines.extend(_weight_lines(g.weights))
    lines.extend(f"e {a} {b}" for a, b in sorted(g.edges))
    return "\n".join(lines) + "\n"


def serialize_split(h: SplitGraph, comments: tuple[str, ...] | list[str] = ()) -> str:
    lines = _comment_block(comments)
    lines.append(f"p split {h.n_clique} {h.n_indep} {len(h.cross_edges)} {h.t}")
    lines.extend(_weight_lines(h.weights))
    lines.extend(f"e {c} {i}" for c, i in sorted(h.cross_edges))
    return "\n".join(lines) + "\n"


def serialize_hypergraph(hy: Hypergraph, comments: tuple[str, ...] | list[str] = ()) -> str:
    lines = _comment_block(comments)
    lines.append(f"p hyp {hy.n} {hy.m} {hy.t}")
    lines.extend("h " + " ".join(str(v) for v in e) for e in hy.hyperedges)
    return "\n".join(lines) + "\n"


def sniff_format(text: str | bytes) -> str:
    """Return 'bip', 'split' or 'hyp' from the header of `text`."""
    for line_no, tokens in _lines(text):
        if tokens[0] != "p" or len(tokens) < 2 or tokens[1] not in ("bip", "split", "hyp"):
            raise ParseError("first content line must be a 'p bip|split|hyp' header", line_no)
        return tokens[1]
    raise ParseError("empty input")


def parse_auto(text: str | bytes) -> BipartiteGraph | SplitGraph | Hypergraph:
    """Parse any of the three formats, dispatching on the header."""
    kind = sniff_format(text)
    if kind == "bip":
        return parse_bipartite(text)
    if kind == "split":
        return parse_split(text)
    return parse_hypergraph(text)
