import itertools
import random

import pytest

from unicrit.errors import (
    DegreeCapExceeded,
    DomainError,
    DuplicateGenerator,
    EmptySet,
    InvalidExponent,
    OrbitSizeExceeded,
)
from unicrit.semigroup import (
    count_words,
    enumerate_words,
    eval_word,
    expand_word,
    make_generator_set,
    parse_poly,
    parse_word,
    poly_eval,
    poly_to_text,
    prefix_extension_fraction,
    word_to_text,
)

S2 = make_generator_set(2, [-12, -4])
S3 = make_generator_set(3, [-504, 8])


def test_make_generator_set():
    S = make_generator_set(2, [-12, -4])
    assert S.r == 2 and S.p == 2 and S.coeffs == (-12, -4)
    with pytest.raises(DuplicateGenerator):
        make_generator_set(2, [-12, -12])
    with pytest.raises(InvalidExponent):
        make_generator_set(4, [1])
    with pytest.raises(EmptySet):
        make_generator_set(2, [])


def test_eval_word_examples():
    assert eval_word(S2, [0], 0) == -12
    assert eval_word(S2, [0, 1], 0) == 4
    assert eval_word(S2, [1, 0], 0) == 140
    assert eval_word(S2, [], 123) == 123


def test_eval_word_composition_law():
    rng = random.Random(5)
    for S in (S2, S3):
        for _ in range(50):
            w1 = tuple(rng.randrange(S.r) for _ in range(rng.randrange(4)))
            w2 = tuple(rng.randrange(S.r) for _ in range(rng.randrange(4)))
            x = rng.randrange(-5, 6)
            assert eval_word(S, w1 + w2, x) == eval_word(S, w1, eval_word(S, w2, x))


def test_eval_word_bit_guard():
    with pytest.raises(OrbitSizeExceeded):
        eval_word(S2, [0] * 40, 5, bit_guard=1000)
    # guard disabled: a shorter word from the same start completes
    assert eval_word(S2, [0] * 12, 5, bit_guard=None) > 0


def test_expand_word_examples():
    assert expand_word(S2, [0, 0]) == [132, 0, -24, 0, 1]
    assert expand_word(S2, []) == [0, 1]
    with pytest.raises(DegreeCapExceeded):
        expand_word(make_generator_set(2, [1]), [0] * 20, degree_cap=4096)


def test_expand_word_degree_and_monic():
    for S in (S2, S3):
        for w in enumerate_words(S, 3):
            coeffs = expand_word(S, w, degree_cap=100)
            assert len(coeffs) - 1 == S.p ** len(w)
            assert coeffs[-1] == 1


def test_expand_matches_eval():
    rng = random.Random(11)
    for S in (S2, S3):
        for w in enumerate_words(S, 4 if S.p == 2 else 3):
            coeffs = expand_word(S, w, degree_cap=200)
            for _ in range(4):
                x = rng.randrange(-6, 7)
                assert poly_eval(coeffs, x) == eval_word(S, w, x)


def test_enumerate_words_order_and_counts():
    words = list(enumerate_words(S2, 2))
    assert words == [(0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]
    S3g = make_generator_set(3, [1, 2, 3])
    assert len(list(enumerate_words(S3g, 3))) == 39
    S1 = make_generator_set(2, [7])
    assert len(list(enumerate_words(S1, 5))) == 5
    assert list(enumerate_words(S2, 0)) == []
    assert count_words(2, 12) == 8190


def test_freeness_witness_words_length_4():
    # distinct words of length <= 4 expand to distinct coefficient vectors
    for S in (S2, S3):
        seen = {}
        for w in enumerate_words(S, 4):
            key = tuple(expand_word(S, w, degree_cap=3 ** 4))
            assert key not in seen, (w, seen[key])
            seen[key] = w


def test_prefix_extension_fraction():
    from fractions import Fraction

    assert prefix_extension_fraction(2, 4, 12) == Fraction(511, 8190)
    assert prefix_extension_fraction(2, 0, 5) == 1
    # per-length identity: among words of exact length L the fraction is r**-g
    r, g = 2, 4
    for L in range(g, 13):
        assert Fraction(r ** (L - g), r ** L) == Fraction(1, r ** g)


def test_poly_text_round_trip():
    assert poly_to_text([-12, 0, 1]) == "x^2 - 12"
    assert poly_to_text([132, 0, -24, 0, 1]) == "x^4 - 24x^2 + 132"
    assert poly_to_text([0, 1]) == "x"
    assert poly_to_text([0]) == "0"
    assert poly_to_text([5]) == "5"
    assert poly_to_text([0, -1]) == "-x"
    assert parse_poly("x^2 - 12") == [-12, 0, 1]
    assert parse_poly("x^4 - 24x^2 + 132") == [132, 0, -24, 0, 1]
    assert parse_poly("0") == [0]
    assert parse_poly("-x") == [0, -1]
    rng = random.Random(3)
    for _ in range(50):
        coeffs = [rng.randrange(-9, 10) for _ in range(rng.randrange(1, 7))]
        if all(c == 0 for c in coeffs):
            coeffs = [1]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        assert parse_poly(poly_to_text(coeffs)) == coeffs
    with pytest.raises(DomainError):
        parse_poly("x^2 + y")
    with pytest.raises(DomainError):
        parse_poly("")


def test_word_text_round_trip():
    assert word_to_text((0, 0, 1, 0)) == "[0,0,1,0]"
    assert parse_word("[0,0,1,0]") == (0, 0, 1, 0)
    assert parse_word("g = [0,0,1,0]") == (0, 0, 1, 0)
    assert parse_word("0,1") == (0, 1)
    assert parse_word("[]") == ()
    with pytest.raises(DomainError):
        parse_word("[0,x]")


def test_validate_word_range():
    with pytest.raises(DomainError):
        eval_word(S2, [0, 2], 0)
