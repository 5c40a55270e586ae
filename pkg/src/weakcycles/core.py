"""Weak orders on [n] in height-word form.

A weak order is stored as a tuple of ints ``w`` where ``w[j-1]`` is the
number of strict steps ``<`` that precede element ``j``.  The distinct
symbols of a valid word are always ``{0, ..., h}``.  Prefixes, suffixes and
overlap windows of height words are plain tuples too and carry no
contiguity guarantee (``(1, 1)`` is a prefix of ``(1, 1, 0)``).

Relation strings use ``=`` for ties and ``<`` for strict steps, e.g.
``"2<1=3"``.  Element labels are decimal and delimited by the operators, so
multi-digit labels need no extra punctuation.
"""

from __future__ import annotations

import re
from collections import Counter
from typing import Iterable, Sequence

from .errors import GapError, InvalidWordError, MissingZero, OutOfRange, RelationSyntaxError

HeightWord = tuple[int, ...]
PartialWord = tuple[int, ...]
OrderedPartition = tuple[tuple[int, ...], ...]

__all__ = [
    "HeightWord",
    "PartialWord",
    "OrderedPartition",
    "validate",
    "is_valid",
    "parse_relation",
    "format_relation",
    "height",
    "weight",
    "multiset",
    "rotate",
    "take_prefix",
    "take_suffix",
    "to_ordered_partition",
    "from_ordered_partition",
    "format_partition",
    "parse_partition",
    "word_from_string",
    "word_to_string",
]


def validate(symbols: Iterable[int]) -> HeightWord:
    """Return ``symbols`` as a HeightWord or raise.

    >>> validate([0, 0, 1])
    (0, 0, 1)
    """
    w = tuple(int(x) for x in symbols)
    n = len(w)
    if n == 0:
        raise InvalidWordError("a height word must be non-empty")
    if min(w) < 0:
        raise InvalidWordError(f"negative symbol in {w}")
    top = max(w)
    if top >= n:
        raise OutOfRange(f"symbol {top} >= n={n} in {w}")
    present = set(w)
    if 0 not in present:
        raise MissingZero(f"symbol 0 absent from {w}")
    if len(present) != top + 1:
        gaps = sorted(set(range(top + 1)) - present)
        raise GapError(f"levels {gaps} missing from {w}")
    return w


def is_valid(symbols: Sequence[int]) -> bool:
    try:
        validate(symbols)
    except InvalidWordError:
        return False
    return True


_TOKEN = re.compile(r"\s*(?:(\d+)|([<=]))")


def parse_relation(text: str) -> HeightWord:
    """Parse ``"2<1=3"`` into the height word ``(1, 0, 1)``."""
    pos = 0
    elements: list[int] = []
    levels: list[int] = []
    level = 0
    expect_element = True
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if m is None:
            raise RelationSyntaxError(f"unexpected character at offset {pos} in {text!r}")
        label, op = m.groups()
        if expect_element:
            if label is None:
                raise RelationSyntaxError(f"expected an element at offset {pos} in {text!r}")
            elements.append(int(label))
            levels.append(level)
        else:
            if op is None:
                raise RelationSyntaxError(f"expected '<' or '=' at offset {pos} in {text!r}")
            if op == "<":
                level += 1
        expect_element = not expect_element
        pos = m.end()
    if expect_element:
        raise RelationSyntaxError(f"relation {text!r} is empty or ends with an operator")

    n = len(elements)
    if sorted(elements) != list(range(1, n + 1)):
        raise RelationSyntaxError(f"elements of {text!r} are not a permutation of 1..{n}")
    w = [0] * n
    for element, lvl in zip(elements, levels):
        w[element - 1] = lvl
    return validate(w)


def format_relation(w: Sequence[int]) -> str:
    """Canonical relation string; tied elements are listed in ascending order."""
    w = validate(w)
    groups: list[list[int]] = [[] for _ in range(max(w) + 1)]
    for j, level in enumerate(w, start=1):
        groups[level].append(j)
    return "<".join("=".join(str(j) for j in g) for g in groups)


def height(w: Sequence[int]) -> int:
    return max(w)


def weight(w: Sequence[int]) -> int:
    return sum(w)


def multiset(w: Sequence[int]) -> Counter:
    return Counter(w)


def rotate(w: Sequence[int]) -> tuple[int, ...]:
    """Move the first letter to the end: ``w1 w2 ... wn -> w2 ... wn w1``."""
    w = tuple(w)
    return w[1:] + w[:1]


def take_prefix(w: Sequence[int], s: int) -> PartialWord:
    if not 0 <= s <= len(w):
        raise ValueError(f"prefix length {s} outside 0..{len(w)}")
    return tuple(w[:s])


def take_suffix(w: Sequence[int], s: int) -> PartialWord:
    if not 0 <= s <= len(w):
        raise ValueError(f"suffix length {s} outside 0..{len(w)}")
    return tuple(w[len(w) - s:])


def to_ordered_partition(w: Sequence[int]) -> OrderedPartition:
    """Blocks of elements sharing a height, lowest height first.

    >>> to_ordered_partition((1, 0, 1))
    ((2,), (1, 3))
    """
    w = validate(w)
    blocks: list[list[int]] = [[] for _ in range(max(w) + 1)]
    for j, level in enumerate(w, start=1):
        blocks[level].append(j)
    return tuple(tuple(b) for b in blocks)


def from_ordered_partition(blocks: Iterable[Iterable[int]]) -> HeightWord:
    parts = [sorted(b) for b in blocks]
    if not parts or any(not b for b in parts):
        raise InvalidWordError("an ordered partition needs non-empty blocks")
    flat = [x for b in parts for x in b]
    n = len(flat)
    if sorted(flat) != list(range(1, n + 1)):
        raise InvalidWordError(f"blocks {parts} do not partition 1..{n}")
    w = [0] * n
    for level, block in enumerate(parts):
        for j in block:
            w[j - 1] = level
    return tuple(w)


def format_partition(blocks: OrderedPartition) -> str:
    """Render as ``"2|13"``; labels are comma-joined once any exceeds 9."""
    sep = "," if any(x > 9 for b in blocks for x in b) else ""
    return "|".join(sep.join(str(x) for x in b) for b in blocks)


def parse_partition(text: str) -> OrderedPartition:
    """Inverse of ``format_partition``.

    Blocks are read digit by digit unless the text holds a comma or that
    reading is not a partition, in which case each comma-separated token is
    one label.
    """
    chunks = [c.strip() for c in text.split("|")]

    def read(by_digit):
        if by_digit:
            return [tuple(sorted(int(c) for c in chunk)) for chunk in chunks]
        return [tuple(sorted(int(x) for x in chunk.split(","))) for chunk in chunks]

    if "," not in text:
        try:
            blocks = read(True)
            from_ordered_partition(blocks)
            return tuple(blocks)
        except (InvalidWordError, ValueError):
            pass
    blocks = read(False)
    from_ordered_partition(blocks)
    return tuple(blocks)


def word_from_string(text: str) -> tuple[int, ...]:
    """``"0 1 0"`` or ``"010"`` (single-digit shorthand) -> ``(0, 1, 0)``."""
    text = text.strip()
    if not text:
        return ()
    if any(ch.isspace() for ch in text) or "," in text:
        return tuple(int(tok) for tok in re.split(r"[\s,]+", text) if tok)
    return tuple(int(c) for c in text)


def word_to_string(w: Sequence[int]) -> str:
    return " ".join(str(x) for x in w)
