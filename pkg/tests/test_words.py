import pytest
from hypothesis import given

from freebraid import (
    BraidWord,
    JSON,
    ParseError,
    Permutation,
    closure_components,
    is_cyclic,
    parse_word,
    permutation,
    serialize,
    strand_trace,
)
from freebraid.scenarios import BRUNNIAN_TEXT

from strategies import braid_words, permutations, word_pairs_same_n


def test_parse_single_letter():
    assert parse_word("n=2; z1") == BraidWord(2, (1,))


def test_parse_header_optional_infers_smallest_n():
    assert parse_word("z1 t3").n == 4
    assert parse_word("").n == 1


def test_parse_brunnian_word():
    w = parse_word(BRUNNIAN_TEXT)
    assert w.n == 9
    assert len(w) == 38
    assert w.classical_count == 8


@pytest.mark.parametrize("text", ["n=3; z3", "n=2; q1", "z0", "n=2; z1 x", "n=0;"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_letters_validated_on_construction():
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(1, (1,))


def test_serialize_examples():
    assert serialize(BraidWord(2, (1,))) == "n=2; z1"
    assert serialize(BraidWord(3)) == "n=3;"


def test_serialize_round_trips_brunnian_letter_for_letter():
    w = parse_word(BRUNNIAN_TEXT)
    assert parse_word(serialize(w)) == w
    assert parse_word(serialize(w, JSON)) == w


@given(braid_words())
def test_parse_serialize_identity(word):
    assert parse_word(serialize(word)) == word
    assert parse_word(serialize(word, JSON)) == word


def test_permutation_examples():
    assert permutation(BraidWord(2, (1,))).image == (2, 1)
    assert permutation(BraidWord(3, (-1, -2))).image == (3, 1, 2)


def test_brunnian_permutation_is_the_expected_cycle():
    p = permutation(parse_word(BRUNNIAN_TEXT))
    assert p.image == (9, 1, 2, 3, 4, 5, 6, 7, 8)
    assert is_cyclic(p)


@given(word_pairs_same_n())
def test_permutation_is_a_concatenation_homomorphism(pair):
    w1, w2 = pair
    assert permutation(w1 * w2) == permutation(w1).compose(permutation(w2))


def test_is_cyclic_examples():
    assert not is_cyclic(Permutation.identity(3))
    assert is_cyclic(Permutation((2, 1)))
    assert is_cyclic(Permutation.identity(1))


def test_closure_components_examples():
    assert closure_components(BraidWord(3))[0] == 3
    assert closure_components(BraidWord(2, (1,)))[0] == 1
    assert closure_components(parse_word(BRUNNIAN_TEXT))[0] == 1


@given(braid_words())
def test_closure_component_count_is_cycle_count(word):
    count, cycles = closure_components(word)
    assert count == len(cycles)
    assert sorted(s for c in cycles for s in c) == list(range(1, word.n + 1))


def test_strand_trace_examples():
    assert strand_trace(BraidWord(2, (1,))) == ((1, 2),)
    assert strand_trace(BraidWord(3, (1, 2, 1))) == ((1, 2), (1, 3), (2, 3))
    assert strand_trace(BraidWord(4, (1, -3, 1))) == ((1, 2), (3, 4), (1, 2))


@given(braid_words())
def test_strand_trace_is_deterministic_with_distinct_strands(word):
    trace = strand_trace(word)
    assert trace == strand_trace(word)
    assert len(trace) == len(word)
    for a, b in trace:
        assert a != b
        assert 1 <= a <= word.n and 1 <= b <= word.n


@given(permutations())
def test_permutation_inverse_and_cycles(p):
    assert p.compose(p.inverse()).is_identity()
    assert sorted(s for c in p.cycles() for s in c) == list(range(1, p.n + 1))


def test_concatenation_requires_matching_strand_count():
    from freebraid import PreconditionError
    with pytest.raises(PreconditionError):
        BraidWord(2) * BraidWord(3)
