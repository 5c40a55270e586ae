"""Euler tours of transition graphs and the cycles they spell."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotBalanced, NotConnected, ParameterError
from .families import Family
from .graph import TransitionGraph, build, is_balanced, weakly_connected_components

__all__ = ["CycleResult", "euler_tour", "spell", "generate", "ucycle", "least_rotation"]


@dataclass(frozen=True)
class CycleResult:
    symbols: tuple[int, ...]
    family: str
    overlap: int
    object_count: int
    object_length: int

    @property
    def step(self) -> int:
        return self.object_length - self.overlap

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.symbols)

    def windows(self) -> list[tuple[int, ...]]:
        """The objects in cycle order, read at offsets ``j * step``."""
        return windows(self.symbols, self.object_length, self.step)

    def canonical(self) -> CycleResult:
        """Least rotation that keeps objects aligned on multiples of ``step``."""
        rotated = least_rotation(self.symbols, self.step)
        return CycleResult(rotated, self.family, self.overlap, self.object_count, self.object_length)


def windows(symbols: Sequence[int], length: int, step: int) -> list[tuple[int, ...]]:
    m = len(symbols)
    if m == 0:
        return []
    ext = tuple(symbols) * (1 + (length + m - 1) // m)
    return [ext[i:i + length] for i in range(0, m, step)]


def least_rotation(symbols: Sequence[int], step: int = 1) -> tuple[int, ...]:
    """Lexicographically least rotation by a multiple of ``step`` (Booth)."""
    symbols = tuple(symbols)
    if not symbols:
        return symbols
    if len(symbols) % step:
        raise ParameterError(f"cycle length {len(symbols)} is not a multiple of step {step}")
    blocks = [symbols[i:i + step] for i in range(0, len(symbols), step)]
    n = len(blocks)
    s = blocks + blocks
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = fail[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    k %= n
    return tuple(x for b in blocks[k:] + blocks[:k] for x in b)


def _check_eulerian(g: TransitionGraph) -> None:
    bal = is_balanced(g)
    if not bal.ok:
        raise NotBalanced(
            f"graph for {g.tag} is not balanced at vertex {bal.vertex} "
            f"(in={bal.in_degree}, out={bal.out_degree})",
            {
                "reason": "not_balanced",
                "family": g.tag,
                "overlap": g.overlap,
                "vertex": list(bal.vertex),
                "in_degree": bal.in_degree,
                "out_degree": bal.out_degree,
            },
        )
    comps = weakly_connected_components(g)
    if len(comps) > 1:
        raise NotConnected(
            f"graph for {g.tag} with overlap {g.overlap} has {len(comps)} components",
            {
                "reason": "not_connected",
                "family": g.tag,
                "overlap": g.overlap,
                "components": len(comps),
                "component_sizes": [len(c) for c in comps],
                "component_minima": [list(c[0]) for c in comps],
            },
        )


def euler_tour(g: TransitionGraph) -> list[int]:
    """Closed trail using every edge once, as a list of edge indices.

    Iterative Hierholzer: starts at the least vertex and always leaves a
    vertex by its lexicographically smallest unused out-edge.
    """
    _check_eulerian(g)
    out = g.out_edges
    heads = g.heads
    nxt = [0] * g.num_vertices
    start = g.index[min(g.vertices)]
    vstack = [start]
    estack: list[int] = []
    circuit: list[int] = []
    while vstack:
        v = vstack[-1]
        if nxt[v] < len(out[v]):
            e = out[v][nxt[v]]
            nxt[v] += 1
            vstack.append(heads[e])
            estack.append(e)
        else:
            vstack.pop()
            if estack:
                circuit.append(estack.pop())
    circuit.reverse()
    return circuit


def spell(tour: Sequence[int], g: TransitionGraph) -> CycleResult:
    step = g.word_length - g.overlap
    symbols: list[int] = []
    for e in tour:
        symbols.extend(g.words[e][:step])
    return CycleResult(tuple(symbols), g.tag, g.overlap, len(tour), g.word_length)


def generate(f: Family, s: int | None = None, canonical: bool = False) -> CycleResult:
    """Build, tour and spell; ``s=None`` asks for a universal cycle.

    Length-1 objects need no graph: any listing of them is a universal
    cycle, and the sorted one is returned.
    """
    L = f.word_length
    if s is None:
        s = L - 1
    if L == 1:
        if s != 0:
            raise ParameterError(f"{f} has length-1 words; only overlap 0 is possible")
        words = f.enumerate()
        result = CycleResult(tuple(w[0] for w in words), f.descriptor, 0, len(words), 1)
    else:
        g = build(f, s)
        result = spell(euler_tour(g), g)
    return result.canonical() if canonical else result


def ucycle(f: Family, canonical: bool = False) -> CycleResult:
    return generate(f, None, canonical=canonical)
