import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weakcycles.core import (
    format_partition,
    format_relation,
    from_ordered_partition,
    height,
    parse_partition,
    parse_relation,
    rotate,
    take_prefix,
    take_suffix,
    to_ordered_partition,
    validate,
    weight,
    word_from_string,
    multiset,
)
from weakcycles.errors import GapError, InvalidWordError, MissingZero, OutOfRange, RelationSyntaxError
from weakcycles.families import weak_orders

W = word_from_string

# the two listings of W(3), position by position
RELATIONS_W3 = [
    ("1=2=3", "000"), ("1=2<3", "001"), ("1<2=3", "011"), ("1=3<2", "010"),
    ("2=3<1", "100"), ("2<1=3", "101"), ("3<1=2", "110"), ("1<3<2", "021"),
    ("2<1<3", "102"), ("1<2<3", "012"), ("3<1<2", "120"), ("2<3<1", "201"),
    ("3<2<1", "210"),
]


def test_validate_examples():
    assert validate(W("001")) == (0, 0, 1)
    assert validate([0]) == (0,)
    with pytest.raises(GapError):
        validate(W("002"))


@pytest.mark.parametrize(
    "word, exc",
    [("11", MissingZero), ("0013", GapError), ("03", OutOfRange), ("", InvalidWordError)],
)
def test_validate_rejects(word, exc):
    with pytest.raises(exc):
        validate(W(word))


def test_missing_zero_is_a_gap():
    assert issubclass(MissingZero, GapError)


@pytest.mark.parametrize("relation, word", RELATIONS_W3)
def test_relation_listing(relation, word):
    assert parse_relation(relation) == W(word)


@pytest.mark.parametrize("relation, word", [("1=2=3", "000"), ("1<3<2", "021"), ("2<1=3", "101")])
def test_format_relation(relation, word):
    assert format_relation(W(word)) == relation


def test_parse_tolerates_whitespace_and_long_labels():
    assert parse_relation(" 2 < 1 = 3 ") == (1, 0, 1)
    text = "10<1=2=3=4=5=6=7=8=9"
    w = parse_relation(text)
    assert w == (1,) * 9 + (0,)
    assert format_relation(w) == text
    assert format_relation(parse_relation("1<2<3<4<5<6<7<8<9<10")) == "1<2<3<4<5<6<7<8<9<10"


@pytest.mark.parametrize("text", ["", "1<", "<1", "1<<2", "1=1", "1<3", "1,2", "a<1", "1 2"])
def test_parse_rejects(text):
    with pytest.raises(RelationSyntaxError):
        parse_relation(text)


@pytest.mark.parametrize("n", range(1, 6))
def test_relation_round_trip(n):
    for w in weak_orders(n):
        assert parse_relation(format_relation(w)) == w


def test_height_weight():
    assert height(W("000")) == 0
    assert height(W("021")) == 2
    assert height(W("0102")) == 2
    assert weight(W("000")) == 0
    assert weight(W("021")) == 3
    assert weight(W("000112")) == 4


def test_rotate_examples():
    assert rotate(W("012")) == W("120")
    assert rotate(W("000")) == W("000")
    assert rotate(W("101")) == W("011")


def test_prefix_suffix():
    w = W("021")
    assert take_prefix(w, 2) == (0, 2)
    assert take_suffix(w, 2) == (2, 1)
    assert take_prefix(w, 3) == w
    assert take_prefix(take_prefix(w, 2), 1) == (0,)
    with pytest.raises(ValueError):
        take_prefix(w, 4)


@pytest.mark.parametrize("n", range(1, 7))
def test_rotation_preserves_statistics(n):
    for w in weak_orders(n):
        r = rotate(w)
        assert validate(r) == r
        assert (height(r), weight(r), multiset(r)) == (height(w), weight(w), multiset(w))


@given(st.integers(1, 7).flatmap(lambda n: st.lists(st.integers(0, n - 1), min_size=n, max_size=n)), st.randoms())
def test_permutation_closure(symbols, rnd):
    try:
        validate(symbols)
    except InvalidWordError:
        return
    shuffled = list(symbols)
    rnd.shuffle(shuffled)
    assert validate(shuffled) == tuple(shuffled)


PARTITIONS_W3 = ["123", "12|3", "1|23", "13|2", "23|1", "2|13", "3|12", "1|3|2",
                 "2|1|3", "1|2|3", "3|1|2", "2|3|1", "3|2|1"]


def test_partition_listing_matches_words():
    for (_, word), part in zip(RELATIONS_W3, PARTITIONS_W3):
        assert format_partition(to_ordered_partition(W(word))) == part
        assert from_ordered_partition(parse_partition(part)) == W(word)


def test_partition_examples():
    assert to_ordered_partition(W("000")) == ((1, 2, 3),)
    assert to_ordered_partition(W("021")) == ((1,), (3,), (2,))
    assert to_ordered_partition(W("101")) == ((2,), (1, 3))
    assert from_ordered_partition([[3], [1, 2]]) == W("110")


@pytest.mark.parametrize("blocks", [[[1], []], [[1, 2], [2, 3]], [[1], [3]], []])
def test_bad_partitions(blocks):
    with pytest.raises(InvalidWordError):
        from_ordered_partition(blocks)


def test_random_partition_round_trip():
    rnd = random.Random(7)
    for _ in range(200):
        n = rnd.randint(1, 12)
        elems = list(range(1, n + 1))
        rnd.shuffle(elems)
        cuts = sorted(rnd.sample(range(1, n), rnd.randint(0, n - 1))) if n > 1 else []
        blocks = [tuple(sorted(elems[a:b])) for a, b in zip([0] + cuts, cuts + [n])]
        w = from_ordered_partition(blocks)
        assert to_ordered_partition(w) == tuple(blocks)
        assert parse_partition(format_partition(tuple(blocks))) == tuple(blocks)


def test_word_from_string_forms():
    assert W("0 10 2") == (0, 10, 2)
    assert W("0,1") == (0, 1)
    assert W("012") == (0, 1, 2)
