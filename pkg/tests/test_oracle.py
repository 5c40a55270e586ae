import itertools
import math
import random

import pytest

from weakcycles.core import word_from_string as W
from weakcycles.errors import EmptyFamily, LengthMismatch, ParameterError
from weakcycles.euler import generate
from weakcycles.families import (
    all_weak_orders,
    binary,
    fixed_weight,
    fixed_weight_height_prefix,
    fixed_weight_prefix,
)
from weakcycles.graph import build
from weakcycles.oracle import (
    decompose_weight,
    lex_min_bounded_word,
    min_vertex_formula,
    min_vertex_knh,
    min_vertex_knh_oracle,
    min_vertex_oracle,
    min_word_formula,
    verify,
    verify_listing,
)


def test_verify_de_bruijn():
    assert verify(W("00010111"), binary(3)).ok


def test_verify_single_letter():
    assert verify((0,), all_weak_orders(1)).ok


def test_verify_mutated_de_bruijn():
    # windows of 00010110: 000 001 010 101 011 110 100 000
    report = verify(W("00010110"), binary(3))
    assert not report.ok
    assert report.duplicated == [(0, 0, 0)]
    assert report.missing == [(1, 1, 1)]
    assert report.invalid_windows == []


def test_verify_invalid_window():
    report = verify(W("0012"), binary(2), 1)
    assert report.invalid_windows == [(1, 2), (2, 0)]


def test_length_mismatch():
    with pytest.raises(LengthMismatch):
        verify(W("0001"), binary(3))


def test_verify_listing():
    f = all_weak_orders(2)
    assert verify_listing([(0, 1), (1, 0), (0, 0)], f, 1).ok
    report = verify_listing([(0, 1), (0, 0), (1, 0)], f, 1)
    assert report.overlap_violations == [0, 1]


def test_mutations_detected():
    rnd = random.Random(1)
    cases = [(all_weak_orders(4), 3), (all_weak_orders(4), 1), (fixed_weight_prefix(5, 4), None), (binary(4), 3)]
    for f, s in cases:
        c = generate(f, s)
        for _ in range(25):
            i = rnd.randrange(len(c))
            new = rnd.choice([x for x in range(f.n + 1) if x != c.symbols[i]])
            mutated = c.symbols[:i] + (new,) + c.symbols[i + 1:]
            assert not verify(mutated, f, s).ok


def _scan(k):
    return [(a, b) for a in range(0, k + 3) for b in range(0, a) if math.comb(a, 2) + b == k]


@pytest.mark.parametrize("k, a, b", [(0, 1, 0), (4, 3, 1), (10, 5, 0), (3, 3, 0)])
def test_decompose_examples(k, a, b):
    assert decompose_weight(k)[1:] == (a, b)


def test_decompose_unique_by_scan():
    for k in range(101):
        found = _scan(k)
        d = decompose_weight(k)
        if k == 0:
            # a = 1, b = 0 is the convention; a = 0 has no b < 0 partner
            assert (d.a, d.b) == (1, 0) and (1, 0) in found
        else:
            assert found == [(d.a, d.b)]
    with pytest.raises(ParameterError):
        decompose_weight(-1)


@pytest.mark.parametrize("n, k, vertex", [(6, 3, "0000"), (6, 4, "0001"), (3, 3, "0")])
def test_min_vertex_oracle_examples(n, k, vertex):
    assert min_vertex_oracle(n, k) == W(vertex)


def test_min_vertex_oracle_matches_graph():
    for n in range(3, 7):
        for k in range(1, math.comb(n, 2) + 1):
            g = build(fixed_weight_prefix(n, k), n - 2)
            assert min(g.vertices) == min_vertex_oracle(n, k)


def test_min_word_formula_examples():
    assert min_word_formula(6, 3) == W("000012")
    assert min_vertex_formula(6, 3) == W("0000")
    assert min_word_formula(6, 4) == W("000112")
    assert min_vertex_formula(6, 4) == W("0001")


def test_literal_formula_discrepancy():
    w = min_word_formula(6, 3, literal=True)
    assert w == W("000123")
    assert sum(w) == 6 != 3


def test_literal_weight_is_k_plus_a():
    for k in range(1, 16):
        _, a, _ = decompose_weight(k)
        assert sum(min_word_formula(a + 2, k, literal=True)) == k + a


@pytest.mark.parametrize("n", range(2, 9))
def test_formula_matches_oracle(n):
    for k in range(1, math.comb(n, 2) + 1):
        w = min_word_formula(n, k)
        assert sum(w) == k and w in fixed_weight(n, k)
        expected = min_vertex_oracle(n, k)
        assert min_vertex_formula(n, k) == expected
        # the global minimum is also the minimum among maximum-height words
        ws = fixed_weight(n, k).enumerate()
        top = max(max(x) for x in ws)
        assert min(x[:n - 2] for x in ws if max(x) == top) == expected


def test_formula_rejects_infeasible():
    with pytest.raises(ParameterError):
        min_word_formula(3, 4)


@pytest.mark.parametrize("m, hmax, weight, word", [(3, 2, 3, "012"), (3, 2, 0, "000"), (2, 3, 6, "33")])
def test_lex_min_bounded(m, hmax, weight, word):
    assert lex_min_bounded_word(m, hmax, weight) == W(word)
    brute = min(w for w in itertools.product(range(hmax + 1), repeat=m) if sum(w) == weight)
    assert lex_min_bounded_word(m, hmax, weight) == brute


def test_lex_min_bounded_exhaustive():
    for m in range(0, 5):
        for hmax in range(0, 4):
            for weight in range(0, m * hmax + 1):
                brute = min(w for w in itertools.product(range(hmax + 1), repeat=m) if sum(w) == weight)
                assert lex_min_bounded_word(m, hmax, weight) == brute
    with pytest.raises(ParameterError):
        lex_min_bounded_word(2, 1, 3)


def test_min_vertex_knh_example():
    # forced levels 0,1,2 (weight 3); leftover weight 1 on two letters -> 01
    assert lex_min_bounded_word(2, 2, 1) == (0, 1)
    assert min_vertex_knh(5, 4, 2) == W("001")
    assert min_vertex_knh_oracle(5, 4, 2) == W("001")


def test_min_vertex_knh_forced():
    assert min_vertex_knh(4, 6, 3) == W("01")
    with pytest.raises(ParameterError):
        min_vertex_knh(5, 2, 2)


def test_min_vertex_knh_matches_exhaustive():
    for n in range(2, 9):
        for k in range(math.comb(n, 2) + 1):
            for h in range(n):
                try:
                    expected = min_vertex_knh_oracle(n, k, h)
                except EmptyFamily:
                    with pytest.raises(ParameterError):
                        min_vertex_knh(n, k, h)
                    continue
                assert min_vertex_knh(n, k, h) == expected
                if n >= 3:
                    g = build(fixed_weight_height_prefix(n, k, h), n - 2) if n <= 6 else None
                    if g is not None:
                        assert min(g.vertices) == expected
