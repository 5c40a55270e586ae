"""Independent checks: cycle verification and minimum-vertex constructions.

Nothing here relies on the graph or tour code; verification compares the
windows of a cycle against a fresh enumeration of the family.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from typing import NamedTuple, Sequence

from .errors import LengthMismatch, ParameterError
from .families import Family, fixed_weight, fixed_weight_height, member

__all__ = [
    "VerificationReport",
    "WeightDecomposition",
    "verify",
    "verify_listing",
    "decompose_weight",
    "min_vertex_oracle",
    "min_word_formula",
    "min_vertex_formula",
    "lex_min_bounded_word",
    "min_vertex_knh",
    "min_vertex_knh_oracle",
]


@dataclass
class VerificationReport:
    missing: list = field(default_factory=list)
    duplicated: list = field(default_factory=list)
    invalid_windows: list = field(default_factory=list)
    overlap_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not (self.missing or self.duplicated or self.invalid_windows or self.overlap_violations)

    def __bool__(self) -> bool:
        return self.ok

    def to_dict(self) -> dict:
        d = {k: [list(x) if isinstance(x, tuple) else x for x in v] for k, v in asdict(self).items()}
        d["ok"] = self.ok
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _windows(symbols: tuple[int, ...], length: int, step: int) -> list[tuple[int, tuple[int, ...]]]:
    m = len(symbols)
    ext = symbols * (1 + (length + m - 1) // m)
    return [(i, ext[i:i + length]) for i in range(0, m, step)]


def verify(symbols: Sequence[int], family: Family, s: int | None = None) -> VerificationReport:
    """Check that ``symbols`` is an s-overlap cycle for ``family``.

    Windows of the object length are read at offsets ``j * (L - s)`` with
    wraparound and compared, as a multiset, against the enumerated family.
    ``s=None`` means a universal cycle (``s = L - 1``), in which case every
    offset is checked.
    """
    symbols = tuple(getattr(symbols, "symbols", symbols))
    L = family.word_length
    if s is None:
        s = L - 1
    if not 0 <= s < L:
        raise ParameterError(f"overlap {s} outside 0..{L - 1} for {family}")
    expected = Counter(family.enumerate())
    step = L - s
    if len(symbols) != sum(expected.values()) * step:
        raise LengthMismatch(
            f"cycle has {len(symbols)} symbols; {family} with overlap {s} needs "
            f"{sum(expected.values())} x {step} = {sum(expected.values()) * step}"
        )
    seen: Counter = Counter()
    report = VerificationReport()
    for offset, w in _windows(symbols, L, step):
        seen[w] += 1
        if w not in expected:
            report.invalid_windows.append(w)
    report.duplicated = sorted(w for w, c in seen.items() if c > 1)
    report.missing = sorted(w for w in expected if w not in seen)
    report.invalid_windows = sorted(set(report.invalid_windows))
    return report


def verify_listing(words: Sequence[Sequence[int]], family: Family, s: int) -> VerificationReport:
    """Check an explicit cyclic listing of objects for the s-overlap property."""
    words = [tuple(w) for w in words]
    expected = Counter(family.enumerate())
    seen = Counter(words)
    report = VerificationReport(
        missing=sorted(w for w in expected if w not in seen),
        duplicated=sorted(w for w, c in seen.items() if c > 1),
        invalid_windows=sorted({w for w in words if not member(w, family)}),
    )
    for i, w in enumerate(words):
        nxt = words[(i + 1) % len(words)]
        if len(w) < s or len(nxt) < s or w[len(w) - s:] != nxt[:s]:
            report.overlap_violations.append(i)
    return report


class WeightDecomposition(NamedTuple):
    k: int
    a: int
    b: int


def decompose_weight(k: int) -> WeightDecomposition:
    """Write ``k = C(a, 2) + b`` with ``a`` maximal, so that ``a > b >= 0``."""
    if k < 0:
        raise ParameterError(f"k must be non-negative, got {k}")
    a = (1 + math.isqrt(1 + 8 * k)) // 2
    while math.comb(a, 2) > k:
        a -= 1
    while math.comb(a + 1, 2) <= k:
        a += 1
    a = max(a, 1)
    return WeightDecomposition(k, a, k - math.comb(a, 2))


def min_vertex_oracle(n: int, k: int) -> tuple[int, ...]:
    """Least ``w[:n-2]`` over all weak orders on [n] of weight k, by exhaustion."""
    if n < 2:
        raise ParameterError("vertices of length n-2 need n >= 2")
    return min(w[:n - 2] for w in fixed_weight(n, k).enumerate())


def min_word_formula(n: int, k: int, literal: bool = False) -> tuple[int, ...]:
    """Closed-form weak order of weight k whose two-letter-shorter prefix is least.

    The default form is ``0^(n-a-1) [0,b-1] b b [b+1,a-1]``: the levels
    ``0..a-1`` plus one extra copy of ``b``, padded with zeros and sorted.
    When ``b = 0`` the extra letter carries no weight and is dropped, which
    lets ``n = a`` through.  ``literal=True`` returns the uncorrected shape
    ``0^(n-a-2) [0,b-1] b b [b+1,a]``, whose weight is ``k + a``; it is kept
    only to document that discrepancy.
    """
    _, a, b = decompose_weight(k)
    if literal:
        pad = n - a - 2
        if pad < 0:
            raise ParameterError(f"n={n} too small for the literal shape with a={a}")
        return (0,) * pad + tuple(range(b)) + (b, b) + tuple(range(b + 1, a + 1))
    if k > math.comb(n, 2):
        raise ParameterError(f"no weak order on [{n}] has weight {k}")
    letters = list(range(a)) + ([b] if b else [])
    if len(letters) > n:
        raise ParameterError(f"n={n} too small for a={a}, b={b}")
    return tuple(sorted([0] * (n - len(letters)) + letters))


def min_vertex_formula(n: int, k: int, literal: bool = False) -> tuple[int, ...]:
    if n < 2:
        raise ParameterError("vertices of length n-2 need n >= 2")
    return min_word_formula(n, k, literal=literal)[:n - 2]


def lex_min_bounded_word(m: int, hmax: int, weight: int) -> tuple[int, ...]:
    """Least length-m word over ``0..hmax`` with the given letter sum.

    Greedy: pile the weight onto the rightmost positions.
    """
    if m < 0 or hmax < 0 or not 0 <= weight <= m * hmax:
        raise ParameterError(f"no word of length {m} over 0..{hmax} has weight {weight}")
    word = [0] * m
    left = weight
    for i in range(m - 1, -1, -1):
        word[i] = min(hmax, left)
        left -= word[i]
    return tuple(word)


def min_vertex_knh(n: int, k: int, h: int) -> tuple[int, ...]:
    """Least vertex of the fixed weight and height prefix graph.

    The levels ``0..h`` are forced; the remaining ``n-h-1`` letters are the
    least bounded word of the leftover weight.  All letters are sorted and
    the last two dropped.
    """
    if not 0 <= h < n:
        raise ParameterError(f"h must lie in 0..{n - 1}")
    forced = math.comb(h + 1, 2)
    if k < forced:
        raise ParameterError(f"height {h} needs weight at least {forced}, got {k}")
    try:
        rest = lex_min_bounded_word(n - h - 1, h, k - forced)
    except ParameterError:
        raise ParameterError(f"no weak order on [{n}] has weight {k} and height {h}") from None
    return tuple(sorted(list(range(h + 1)) + list(rest)))[:n - 2]


def min_vertex_knh_oracle(n: int, k: int, h: int) -> tuple[int, ...]:
    return min(w[:n - 2] for w in fixed_weight_height(n, k, h).enumerate())
