from __future__ import annotations

import itertools

import pytest

from del4.errors import InvalidArgument
from del4.words import (
    Code,
    WordClass,
    ambient_counts,
    ball_collision,
    classify,
    covered_words,
    deletion_ball,
    is_deletion_correcting,
    is_perfect,
    lcs_length,
    min_distance,
    parse_word,
    profile,
    rho,
    triple_type,
)


def test_ball_constant_word():
    assert deletion_ball((7, 7, 7, 7), 1) == {(7, 7, 7)}


def test_ball_s0_is_identity():
    assert deletion_ball((0, 1, 2), 0) == {(0, 1, 2)}


def test_ball_distinct_letters():
    assert deletion_ball((0, 1, 2, 3), 1) == {(1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)}


def test_ball_s_too_large():
    with pytest.raises(InvalidArgument):
        deletion_ball((0, 1), 3)


def test_rho_examples():
    assert rho(parse_word("12243"), parse_word("14223")) == 2
    assert rho((0, 1, 2), (0, 1, 2)) == 0
    assert rho((0, 0, 0, 0), (1, 1, 1, 1)) == 8
    assert lcs_length((0, 1, 2, 3), (3, 2, 1, 0)) == 1


def test_min_distance_examples(code_q4):
    assert min_distance(code_q4) > 2
    assert min_distance(Code.of([(0, 0, 0, 0), (0, 0, 1, 1)], 2)) == 4
    assert min_distance(Code.of([(0, 1, 2, 3), (3, 2, 1, 0)], 4)) == 6


def test_min_distance_parallel_agrees(code_q4):
    code = Code.of(itertools.product(range(3), repeat=4), 3)
    assert min_distance(code, jobs=4) == min_distance(code) == 2
    assert min_distance(code_q4, jobs=2) == min_distance(code_q4)


def test_min_distance_needs_two_words():
    with pytest.raises(InvalidArgument):
        min_distance(Code.of([(0, 0)], 2))


def test_deletion_correcting_examples(code_q4):
    assert is_deletion_correcting(code_q4, 1)
    assert is_deletion_correcting(Code.of([(3, 3, 3, 3)], 4), 4)
    bad = Code.of([(0, 0, 1, 1), (0, 1, 0, 1)], 2)
    assert not is_deletion_correcting(bad, 1)
    x, y, shared = ball_collision(bad, 1)
    assert shared in deletion_ball(x, 1) & deletion_ball(y, 1)


def test_perfect_examples(code_q4):
    assert not is_perfect(code_q4, 1)
    assert len(covered_words(code_q4, 1)) == 60
    # Length 1: a single word over B_1 covers the empty word; over larger
    # alphabets two length-1 words already share it.
    assert is_perfect(Code.of([(0,)], 1), 1)
    assert not is_deletion_correcting(Code.of([(0,), (1,)], 2), 1)


def test_is_perfect_requires_correcting_code():
    with pytest.raises(InvalidArgument):
        is_perfect(Code.of([(0, 0, 1, 1), (0, 1, 0, 1)], 2), 1)


def test_code_rejects_bad_words():
    with pytest.raises(InvalidArgument):
        Code(4, 2, ((0, 0, 2, 0),))
    with pytest.raises(InvalidArgument):
        Code(4, 2, ((0, 0, 0, 0), (0, 0, 0, 0)))
    with pytest.raises(InvalidArgument):
        Code(4, 2, ((0, 0, 0),))


def test_classify_examples():
    assert classify((7, 7, 7, 7)) is WordClass.K1
    assert classify((0, 1, 2, 0)) is WordClass.K42
    assert classify((0, 1, 1, 0)) is WordClass.K32
    assert len(deletion_ball((0, 1, 1, 0), 1)) == 3
    with pytest.raises(InvalidArgument):
        classify((0, 1, 2))


def test_classify_ball_sizes_on_normal_forms():
    # The normal-form templates: class determines the ball size.
    for w in [(0, 0, 0, 0), (0, 0, 1, 1), (0, 0, 1, 2), (0, 1, 2, 2), (0, 1, 1, 2),
              (0, 1, 1, 0), (0, 1, 2, 3), (0, 1, 2, 0), (0, 1, 0, 2), (0, 1, 2, 1)]:
        assert len(deletion_ball(w, 1)) == classify(w).ball_size


def test_triple_types():
    assert [triple_type(y) for y in [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 1), (1, 2, 3)]] == [
        "U", "V", "V", "W", "Z"
    ]
    q = 5
    assert ambient_counts(q) == {"U": q, "V": 2 * q * (q - 1), "W": q * (q - 1), "Z": q * (q - 1) * (q - 2)}


def test_profile_q4_code(code_q4):
    p = profile(code_q4)
    K = WordClass
    assert (p.count(K.K1), p.count(K.K2), p.count(K.K42), p.count(K.K41)) == (4, 12, 4, 4)
    assert p.size_from_coverage() == 24
    assert p.class_summary() == p.class_law(4)


def test_profile_empty_code():
    p = profile(Code(4, 3, ()))
    assert p.size == 0
    assert all(v == 0 for per in p.coverage.values() for v in per.values())
