"""Object families: the word sets that cycles are built over.

Every family emits equal-length words in lexicographic order.  Prefix
families (``wkn``, ``wknh``, ``msp``) store each object by its first
``n - 1`` letters; the last letter is implied by the fixed weight or the
fixed multiset.

Descriptor grammar::

    wn:n=5            all weak orders on [5]
    wnh:n=6,h=2       weak orders of height 2
    wkn:n=6,k=4       prefixes of weak orders of weight 4
    wknh:n=6,k=4,h=2  prefixes of weak orders of weight 4 and height 2
    wk-full:n=5,k=4   weak orders of weight 4 (full words)
    wknh-full:n=5,k=4,h=2
    ms:0,0,1,2        permutations of a multiset (full words)
    msp:1,2,3         permutations of a multiset, prefix representation
    bin:n=3           all binary words
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import HeightWord, is_valid
from .errors import EmptyFamily, InvalidWordError, ParameterError

__all__ = [
    "Family",
    "all_weak_orders",
    "fixed_height",
    "fixed_weight_prefix",
    "fixed_weight_height_prefix",
    "fixed_weight",
    "fixed_weight_height",
    "multiset_perms",
    "multiset_perms_prefix",
    "binary",
    "parse_family",
    "enumerate_family",
    "member",
    "count",
    "prefix_family_extend",
    "fubini",
    "stirling2",
    "weak_orders",
    "level_counts",
    "multiset_permutations",
]

KINDS = ("wn", "wnh", "wkn", "wknh", "wk-full", "wknh-full", "ms", "msp", "bin")
PREFIX_KINDS = ("wkn", "wknh", "msp")


@dataclass(frozen=True)
class Family:
    """A parameterised word family.  Build with the factory functions."""

    kind: str
    n: int
    k: int | None = None
    h: int | None = None
    elements: tuple[int, ...] | None = None

    @property
    def is_prefix(self) -> bool:
        return self.kind in PREFIX_KINDS

    @property
    def word_length(self) -> int:
        return self.n - 1 if self.is_prefix else self.n

    @property
    def descriptor(self) -> str:
        if self.kind in ("ms", "msp"):
            return f"{self.kind}:" + ",".join(str(x) for x in self.elements)
        parts = [f"n={self.n}"]
        if self.k is not None:
            parts.append(f"k={self.k}")
        if self.h is not None:
            parts.append(f"h={self.h}")
        return f"{self.kind}:" + ",".join(parts)

    def __str__(self) -> str:
        return self.descriptor

    def enumerate(self) -> list[tuple[int, ...]]:
        return enumerate_family(self)

    def count(self) -> int:
        return count(self)

    def __contains__(self, word) -> bool:
        return member(word, self)


def _check_n(n: int, low: int = 1) -> None:
    if not isinstance(n, int) or n < low:
        raise ParameterError(f"n must be an integer >= {low}, got {n!r}")


def _check_h(n: int, h: int) -> None:
    if not isinstance(h, int) or not 0 <= h <= n - 1:
        raise ParameterError(f"h must lie in 0..{n - 1}, got {h!r}")


def _check_k(n: int, k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise ParameterError(f"k must be a non-negative integer, got {k!r}")
    if k > math.comb(n, 2):
        raise EmptyFamily(f"no weak order on [{n}] has weight {k} > C({n},2) = {math.comb(n, 2)}")


def all_weak_orders(n: int) -> Family:
    _check_n(n)
    return Family("wn", n)


def fixed_height(n: int, h: int) -> Family:
    _check_n(n)
    _check_h(n, h)
    return Family("wnh", n, h=h)


def fixed_weight_prefix(n: int, k: int) -> Family:
    _check_n(n, 2)
    _check_k(n, k)
    return Family("wkn", n, k=k)


def fixed_weight_height_prefix(n: int, k: int, h: int) -> Family:
    _check_n(n, 2)
    _check_k(n, k)
    _check_h(n, h)
    return Family("wknh", n, k=k, h=h)


def fixed_weight(n: int, k: int) -> Family:
    _check_n(n)
    _check_k(n, k)
    return Family("wk-full", n, k=k)


def fixed_weight_height(n: int, k: int, h: int) -> Family:
    _check_n(n)
    _check_k(n, k)
    _check_h(n, h)
    return Family("wknh-full", n, k=k, h=h)


def _check_elements(elements: Sequence[int], low: int) -> tuple[int, ...]:
    m = tuple(sorted(int(x) for x in elements))
    if len(m) < low:
        raise ParameterError(f"multiset needs at least {low} element(s), got {len(m)}")
    if m[0] < 0:
        raise ParameterError("multiset elements must be non-negative")
    return m


def multiset_perms(elements: Sequence[int]) -> Family:
    m = _check_elements(elements, 1)
    return Family("ms", len(m), elements=m)


def multiset_perms_prefix(elements: Sequence[int]) -> Family:
    m = _check_elements(elements, 2)
    return Family("msp", len(m), elements=m)


def binary(n: int) -> Family:
    _check_n(n)
    return Family("bin", n)


def parse_family(text: str) -> Family:
    """Parse a descriptor such as ``"wnh:n=6,h=2"`` or ``"ms:0,0,1,2"``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep or kind not in KINDS:
        raise ParameterError(f"unknown family descriptor {text!r}; kinds are {', '.join(KINDS)}")
    try:
        if kind in ("ms", "msp"):
            elements = [int(x) for x in rest.split(",") if x.strip()]
            return multiset_perms(elements) if kind == "ms" else multiset_perms_prefix(elements)
        params = {}
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise ParameterError(f"malformed parameter {item!r} in {text!r}")
            params[key.strip()] = int(value)
    except ValueError as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ParameterError(f"malformed descriptor {text!r}: {exc}") from None

    required = {
        "wn": ("n",),
        "wnh": ("n", "h"),
        "wkn": ("n", "k"),
        "wknh": ("n", "k", "h"),
        "wk-full": ("n", "k"),
        "wknh-full": ("n", "k", "h"),
        "bin": ("n",),
    }[kind]
    if set(params) != set(required):
        raise ParameterError(f"{kind} takes parameters {', '.join(required)}; got {text!r}")
    factory = {
        "wn": all_weak_orders,
        "wnh": fixed_height,
        "wkn": fixed_weight_prefix,
        "wknh": fixed_weight_height_prefix,
        "wk-full": fixed_weight,
        "wknh-full": fixed_weight_height,
        "bin": binary,
    }[kind]
    return factory(*(params[p] for p in required))


# --- enumeration -----------------------------------------------------------


def level_counts(n: int, height: int | None = None, weight: int | None = None) -> Iterator[tuple[int, ...]]:
    """Count vectors ``(c_0, ..., c_h)`` of weak orders on [n].

    Every level up to the height occurs at least once, the counts sum to
    ``n`` and, if ``weight`` is given, ``sum(i * c_i) == weight``.
    """
    heights = range(n) if height is None else [height]
    for h in heights:
        counts = [1] * (h + 1)

        def fill(level, spare, left):
            if level == h:
                c = 1 + spare
                if left is None or left == h * c:
                    counts[h] = c
                    yield tuple(counts)
                return
            for extra in range(spare + 1):
                c = 1 + extra
                if left is not None and level * c > left:
                    break
                counts[level] = c
                yield from fill(level + 1, spare - extra, None if left is None else left - level * c)

        yield from fill(0, n - h - 1, weight)


def weak_orders(n: int, height: int | None = None, weight: int | None = None) -> list[HeightWord]:
    """All height words of length ``n`` in lexicographic order.

    Only feasible letter multisets are generated (see ``level_counts``);
    each is expanded into its distinct permutations.
    """
    out: list[HeightWord] = []
    for counts in level_counts(n, height, weight):
        letters = [level for level, c in enumerate(counts) for _ in range(c)]
        out.extend(multiset_permutations(letters))
    out.sort()
    return out


def multiset_permutations(elements: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of ``elements`` in lexicographic order."""
    a = sorted(elements)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _full_words(f: Family) -> list[tuple[int, ...]]:
    if f.kind == "wn":
        return weak_orders(f.n)
    if f.kind == "wnh":
        return weak_orders(f.n, height=f.h)
    if f.kind in ("wkn", "wk-full"):
        return weak_orders(f.n, weight=f.k)
    if f.kind in ("wknh", "wknh-full"):
        return weak_orders(f.n, height=f.h, weight=f.k)
    if f.kind in ("ms", "msp"):
        return list(multiset_permutations(f.elements))
    if f.kind == "bin":
        return list(itertools.product((0, 1), repeat=f.n))
    raise ParameterError(f"unknown family kind {f.kind!r}")


def enumerate_family(f: Family) -> list[tuple[int, ...]]:
    """Sorted, duplicate-free word list for ``f``; raises EmptyFamily if none."""
    words = _full_words(f)
    if f.is_prefix:
        # the dropped letter is determined, so truncation keeps order and uniqueness
        words = [w[:-1] for w in words]
    if not words:
        raise EmptyFamily(f"family {f} is empty")
    return words


def _full_member(word: tuple[int, ...], f: Family) -> bool:
    if len(word) != f.n:
        return False
    if f.kind in ("ms", "msp"):
        return tuple(sorted(word)) == f.elements
    if f.kind == "bin":
        return all(x in (0, 1) for x in word)
    if not is_valid(word):
        return False
    if f.h is not None and max(word) != f.h:
        return False
    if f.k is not None and sum(word) != f.k:
        return False
    return True


def member(word: Sequence[int], f: Family) -> bool:
    word = tuple(word)
    if f.is_prefix:
        try:
            word = prefix_family_extend(word, f)
        except (InvalidWordError, ParameterError):
            return False
    return _full_member(word, f)


def prefix_family_extend(word: Sequence[int], f: Family) -> tuple[int, ...]:
    """Recover the full object from its prefix representation."""
    word = tuple(word)
    if not f.is_prefix:
        raise ParameterError(f"{f} is not a prefix family")
    if len(word) != f.word_length:
        raise ParameterError(f"prefix of length {len(word)} given; {f} expects {f.word_length}")
    if f.kind == "msp":
        left = Counter(f.elements)
        left.subtract(word)
        if any(v < 0 for v in left.values()):
            raise InvalidWordError(f"{word} is not a sub-multiset of {f.elements}")
        (last,) = [x for x, c in left.items() if c == 1]
        return word + (last,)
    last = f.k - sum(word)
    if last < 0:
        raise InvalidWordError(f"prefix {word} already exceeds weight {f.k}")
    full = word + (last,)
    if not _full_member(full, f):
        raise InvalidWordError(f"{full} is not in the full family behind {f}")
    return full


# --- counting ----------------------------------------------------------------


def fubini(n: int) -> int:
    """Ordered Bell number via ``a(n) = sum_{j=1..n} C(n,j) a(n-j)``."""
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(math.comb(m, j) * a[m - j] for j in range(1, m + 1)))
    return a[n]


def stirling2(n: int, k: int) -> int:
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, min(i, k) + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def _multinomial(elements: Sequence[int]) -> int:
    total = math.factorial(len(elements))
    for c in Counter(elements).values():
        total //= math.factorial(c)
    return total


def count(f: Family) -> int:
    """Family size, computed without enumerating wherever a formula exists."""
    if f.kind == "wn":
        return fubini(f.n)
    if f.kind == "wnh":
        return math.factorial(f.h + 1) * stirling2(f.n, f.h + 1)
    if f.kind in ("ms", "msp"):
        return _multinomial(f.elements)
    if f.kind == "bin":
        return 2 ** f.n
    return len(_full_words(f))
