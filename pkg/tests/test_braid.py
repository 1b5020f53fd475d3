import pytest
from hypothesis import given, strategies as st

from helpers import hand_permutation
from platorder.braid import (
    BraidWord,
    compose,
    concat,
    format_word,
    free_reduce,
    parse_word,
    permutation_of,
    random_word,
)
from platorder.errors import MalformedInputError, UsageError


def words(strands):
    letter = st.integers(1, strands - 1).flatmap(lambda i: st.sampled_from((i, -i)))
    return st.lists(letter, max_size=16).map(lambda xs: BraidWord(strands, tuple(xs)))


any_word = st.sampled_from([2, 3, 4, 6]).flatmap(words)


def test_parse_examples():
    assert parse_word("1 -2 1", 4).letters == (1, -2, 1)
    assert parse_word("", 4) == BraidWord.identity(4)
    assert parse_word("   ", 4).letters == ()


@pytest.mark.parametrize("text", ["4", "0", "1 -5", "x"])
def test_parse_rejects_bad_tokens(text):
    with pytest.raises(MalformedInputError) as err:
        parse_word(text, 4)
    assert repr(text.split()[-1]) in str(err.value)


def test_word_validates_letters():
    with pytest.raises(MalformedInputError):
        BraidWord(3, (3,))
    with pytest.raises(UsageError):
        BraidWord(1, ())


@pytest.mark.parametrize("letters, expected", [
    ((1, -1), ()),
    ((1, 2, -2, -1), ()),
    ((1, 2, 1), (1, 2, 1)),
    ((-1, 1, 2), (2,)),
])
def test_free_reduce(letters, expected):
    assert free_reduce(BraidWord(4, letters)).letters == expected


def test_permutation_examples():
    assert permutation_of(BraidWord(4)) == (1, 2, 3, 4)
    assert permutation_of(BraidWord(4, (1,))) == (2, 1, 3, 4)
    # (1 3)(2 4), traced by hand
    assert permutation_of(BraidWord(4, (2, 1, 3, 2))) == (3, 4, 1, 2)


@given(any_word)
def test_free_reduce_idempotent_and_keeps_permutation(w):
    r = free_reduce(w)
    assert free_reduce(r) == r
    assert permutation_of(r) == permutation_of(w)
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))


@given(any_word)
def test_format_round_trip(w):
    assert parse_word(format_word(w), w.strands) == w


@given(any_word)
def test_permutation_matches_hand_tracing(w):
    assert permutation_of(w) == hand_permutation(w)


@pytest.mark.parametrize("strands", [4, 6])
def test_permutation_is_a_homomorphism(rng, strands):
    for _ in range(1000):
        u = random_word(rng, strands, rng.randint(0, 10))
        v = random_word(rng, strands, rng.randint(0, 10))
        assert permutation_of(concat(u, v)) == compose(permutation_of(u), permutation_of(v))


def test_concat_needs_matching_strands():
    with pytest.raises(UsageError):
        concat(BraidWord(3), BraidWord(4))
