import pytest

from freebraid import (
    BraidWord,
    GaussianScheme,
    MoveSet,
    OracleVerdict,
    PreconditionError,
    bfs_ball,
    brackets_equal,
    f_equal,
    oracle_equal,
    parse_word,
    strongly_equal,
)

from helpers import random_scheme
import random


def test_ball_contains_triple_slide_image_under_fb():
    ball = bfs_ball(parse_word("n=3; z1 z2 z1"), MoveSet.FB, 5)
    assert parse_word("n=3; z2 z1 z2") in ball


def test_strong_ball_respects_permutation():
    ball = bfs_ball(parse_word("n=3; z1"), MoveSet.STRONG, 5)
    assert parse_word("n=3; z2") not in ball


def test_f_ball_from_empty_word_contains_insertions():
    ball = bfs_ball(BraidWord(2), MoveSet.F, 2)
    assert BraidWord(2, (1, 1)) in ball
    assert BraidWord(2, (-1, -1)) in ball


def test_ball_members_deterministic_and_start_at_origin():
    w = parse_word("n=3; z1 t2")
    b1 = bfs_ball(w, MoveSet.F, 6)
    b2 = bfs_ball(w, MoveSet.F, 6)
    assert b1.members == b2.members
    assert b1.members[0] == w
    assert not b1.cap_exceeded


def test_ball_bound_validation():
    with pytest.raises(PreconditionError):
        bfs_ball(parse_word("n=2; z1 z1"), MoveSet.F, 1)


def test_oracle_equal_examples():
    assert oracle_equal(BraidWord(2, (1, 1)), BraidWord(2), MoveSet.F, 4) is OracleVerdict.EQUAL
    assert oracle_equal(parse_word("n=3; z1 z2 z1"), parse_word("n=3; z2 z1 z2"),
                        MoveSet.F, 7) is OracleVerdict.NOT_FOUND_WITHIN_BOUND
    assert oracle_equal(parse_word("n=3; z1 z2 z1"), parse_word("n=3; z2 z1 z2"),
                        MoveSet.FB, 5) is OracleVerdict.EQUAL


def test_oracle_cap_exceeded_is_reported():
    verdict = oracle_equal(BraidWord(3), parse_word("n=3; z1 z2"), MoveSet.F, 9, node_cap=10)
    assert verdict is OracleVerdict.CAP_EXCEEDED
    ball = bfs_ball(BraidWord(3), MoveSet.F, 9, node_cap=10)
    assert ball.cap_exceeded
    assert len(ball) <= 10


def test_oracle_requires_same_strand_count():
    with pytest.raises(PreconditionError):
        oracle_equal(BraidWord(2), BraidWord(3), MoveSet.F, 5)


def test_oracle_equality_implies_equal_brackets():
    rng = random.Random(13)
    from helpers import random_word
    checked = 0
    while checked < 20:
        w1 = random_word(rng, 3, rng.randint(0, 4))
        ball = bfs_ball(w1, MoveSet.FB, len(w1) + 4, node_cap=200_000)
        if ball.cap_exceeded or len(ball.members) < 2:
            continue
        w2 = ball.members[rng.randrange(len(ball.members))]
        scheme = random_scheme(rng, w1)
        assert brackets_equal(w1, w2, scheme)
        checked += 1


def test_mini_agreement_sweep_strong_and_f():
    """Oracle/decider agreement on all 3-strand words of length <= 3."""
    alphabet = (1, 2, -1, -2)
    words = [BraidWord(3)]
    frontier = [()]
    for _ in range(3):
        frontier = [seq + (a,) for seq in frontier for a in alphabet]
        words += [BraidWord(3, seq) for seq in frontier]

    for moveset, decide, bound in ((MoveSet.STRONG, strongly_equal, 7),
                                   (MoveSet.F, f_equal, 7)):
        class_of = {}
        for w in words:
            if w.letters in class_of:
                continue
            ball = bfs_ball(w, moveset, bound, node_cap=1_000_000)
            assert not ball.cap_exceeded
            for member in ball.members:
                if len(member.letters) <= 3:
                    class_of.setdefault(member.letters, w.letters)
        for a in words:
            for b in words:
                assert decide(a, b) == (class_of[a.letters] == class_of[b.letters]), \
                    (moveset, a, b)
