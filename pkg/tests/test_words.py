import random

import pytest

from necklaces.words import (
    EMPTY_WORD,
    Letter,
    Word,
    canonical_rotation,
    format_word,
    letters,
    parse_word,
    word,
)


def brute_minimal_rotation(w: Word) -> Word:
    # independent oracle: enumerate all rotations, take the minimum
    if len(w) == 0:
        return w
    return min(w.rotations(), key=lambda r: tuple(a.code for a in r))


def test_letter_order():
    x1, x1s, x2, x2s = Letter(1), Letter(1, True), Letter(2), Letter(2, True)
    assert x1 < x1s < x2 < x2s
    assert x1 is Letter(1)
    assert x1.name == "x1" and x1s.name == "x1*"


def test_letter_codes_roundtrip():
    for code in range(10):
        a = Letter.from_code(code)
        assert a.code == code
        assert Letter(a.index, a.starred) is a


def test_word_basics():
    w = word("x1x1*")
    assert len(w) == 2
    assert w.deg_unstarred() == 1 and w.deg_starred() == 1
    assert w * word("x1") == word("x1x1*x1")
    assert EMPTY_WORD * w == w


def test_parse_word_aliases_and_separators():
    assert parse_word("xx*") == word("x1x1*")
    assert parse_word("x1·x1*") == word("x1x1*")
    assert parse_word("x2*x10") == Word([Letter(2, True), Letter(10)])
    assert parse_word("1") == EMPTY_WORD
    assert format_word(parse_word("xx*")) == "x1x1*"
    assert format_word(EMPTY_WORD) == "1"


def test_parse_word_custom_alphabet():
    alpha = {"e11": Letter(1), "e12": Letter(2), "e21": Letter(3), "e22": Letter(4)}
    assert parse_word("e12e21", alpha) == Word([Letter(2), Letter(3)])
    with pytest.raises(ValueError):
        parse_word("e13", alpha)


def test_canonical_rotation_examples():
    # x*x -> xx* under x < x*
    assert canonical_rotation(word("x*x")) == word("xx*")
    assert canonical_rotation(EMPTY_WORD) == EMPTY_WORD
    # all 4 rotations of x*xx*x, minimum is xx*xx*
    assert canonical_rotation(word("x*xx*x")) == word("xx*xx*")


def test_canonical_rotation_idempotent_and_invariant():
    rng = random.Random(0)
    alphabet = letters(2)
    for _ in range(300):
        n = rng.randrange(0, 9)
        w = Word(rng.choice(alphabet) for _ in range(n))
        c = canonical_rotation(w)
        assert c == brute_minimal_rotation(w)
        assert canonical_rotation(c) == c
        for r in w.rotations():
            assert canonical_rotation(r) == c


def test_rotation_is_a_rotation_of_input():
    rng = random.Random(1)
    alphabet = letters(1)
    for _ in range(100):
        w = Word(rng.choice(alphabet) for _ in range(rng.randrange(1, 10)))
        assert canonical_rotation(w) in w.rotations()
