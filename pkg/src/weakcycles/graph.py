"""Overlap transition graphs.

For a family of length-L words and an overlap ``s`` the graph has one
vertex per length-s window that occurs as a prefix or suffix of some word,
and one edge per word, running from its s-prefix to its s-suffix.  An
Euler tour of this multigraph spells an s-overlap cycle; ``s = L - 1``
gives a universal cycle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from .errors import EmptyFamily, OverlapTooLarge, ParameterError
from .families import Family

__all__ = [
    "TransitionGraph",
    "BalanceCheck",
    "UnionFind",
    "build",
    "from_words",
    "is_balanced",
    "weakly_connected_components",
    "export_dot",
    "summary",
]


@dataclass(frozen=True)
class TransitionGraph:
    vertices: tuple[tuple[int, ...], ...]
    words: tuple[tuple[int, ...], ...]
    tails: tuple[int, ...]
    heads: tuple[int, ...]
    out_edges: tuple[tuple[int, ...], ...]
    overlap: int
    word_length: int
    tag: str = ""
    index: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.words)

    def edges(self):
        """Yield ``(tail_word, head_word, object_word)`` triples."""
        for t, h, w in zip(self.tails, self.heads, self.words):
            yield self.vertices[t], self.vertices[h], w

    def in_degrees(self) -> list[int]:
        deg = [0] * len(self.vertices)
        for h in self.heads:
            deg[h] += 1
        return deg

    def out_degrees(self) -> list[int]:
        return [len(e) for e in self.out_edges]


def from_words(words: Sequence[Sequence[int]], s: int, tag: str = "") -> TransitionGraph:
    """Build the s-overlap graph of an explicit word list.

    Edges keep the order of ``words``; pass them sorted to get out-edge
    lists in lexicographic order.
    """
    words = [tuple(w) for w in words]
    if not words:
        raise EmptyFamily(f"no words to build a graph from ({tag or 'anonymous'})")
    L = len(words[0])
    if any(len(w) != L for w in words):
        raise ParameterError("all words must share one length")
    if s < 1:
        raise ParameterError(f"overlap must be >= 1, got {s}; valid range is 1..{L - 1}")
    if s > L - 1:
        raise OverlapTooLarge(f"overlap {s} too large for words of length {L}; valid range is 1..{L - 1}")

    index: dict[tuple[int, ...], int] = {}
    vertices: list[tuple[int, ...]] = []

    def intern(v):
        i = index.get(v)
        if i is None:
            i = index[v] = len(vertices)
            vertices.append(v)
        return i

    tails, heads = [], []
    for w in words:
        tails.append(intern(w[:s]))
        heads.append(intern(w[L - s:]))
    out: list[list[int]] = [[] for _ in vertices]
    for e, t in enumerate(tails):
        out[t].append(e)
    return TransitionGraph(
        vertices=tuple(vertices),
        words=tuple(words),
        tails=tuple(tails),
        heads=tuple(heads),
        out_edges=tuple(tuple(e) for e in out),
        overlap=s,
        word_length=L,
        tag=tag,
        index=index,
    )


def build(f: Family, s: int) -> TransitionGraph:
    if not 1 <= s <= f.word_length - 1:
        cls = OverlapTooLarge if s > f.word_length - 1 else ParameterError
        raise cls(f"overlap {s} invalid for {f}: valid range is 1..{f.word_length - 1}")
    return from_words(f.enumerate(), s, tag=f.descriptor)


@dataclass(frozen=True)
class BalanceCheck:
    ok: bool
    vertex: tuple[int, ...] | None = None
    in_degree: int = 0
    out_degree: int = 0

    def __bool__(self) -> bool:
        return self.ok


def is_balanced(g: TransitionGraph) -> BalanceCheck:
    """Check indegree == outdegree everywhere; report the first offender."""
    indeg = g.in_degrees()
    for v, (din, dout) in enumerate(zip(indeg, g.out_degrees())):
        if din != dout:
            return BalanceCheck(False, g.vertices[v], din, dout)
    return BalanceCheck(True)


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]
        self.count -= 1
        return True


def weakly_connected_components(g: TransitionGraph, ignore_isolated: bool = True) -> list[list[tuple[int, ...]]]:
    """Components of the undirected skeleton, each sorted, listed by least vertex."""
    uf = UnionFind(g.num_vertices)
    for t, h in zip(g.tails, g.heads):
        uf.union(t, h)
    touched = [False] * g.num_vertices
    for t, h in zip(g.tails, g.heads):
        touched[t] = touched[h] = True
    groups: dict[int, list[tuple[int, ...]]] = {}
    for v, word in enumerate(g.vertices):
        if ignore_isolated and not touched[v]:
            continue
        groups.setdefault(uf.find(v), []).append(word)
    comps = [sorted(c) for c in groups.values()]
    comps.sort(key=lambda c: c[0])
    return comps


def _label(word) -> str:
    return " ".join(str(x) for x in word)


def export_dot(g: TransitionGraph) -> str:
    """DOT digraph with one cluster per weakly connected component."""
    comps = weakly_connected_components(g, ignore_isolated=False)
    lines = [f'digraph "{g.tag or "transition"}" {{', f'  label="s={g.overlap}";']
    for i, comp in enumerate(comps):
        lines.append(f"  subgraph cluster_{i} {{")
        for v in comp:
            lines.append(f'    v{g.index[v]} [label="{_label(v)}"];')
        lines.append("  }")
    order = sorted(range(g.num_edges), key=lambda e: g.words[e])
    for e in order:
        lines.append(f'  v{g.tails[e]} -> v{g.heads[e]} [label="{_label(g.words[e])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def summary(g: TransitionGraph) -> dict:
    comps = weakly_connected_components(g)
    bal = is_balanced(g)
    out = {
        "family": g.tag,
        "overlap": g.overlap,
        "vertices": g.num_vertices,
        "edges": g.num_edges,
        "components": len(comps),
        "component_sizes": [len(c) for c in comps],
        "balanced": bal.ok,
    }
    if not bal.ok:
        out["unbalanced_vertex"] = list(bal.vertex)
        out["in_degree"] = bal.in_degree
        out["out_degree"] = bal.out_degree
    return out


def summary_json(g: TransitionGraph) -> str:
    return json.dumps(summary(g), sort_keys=True)
