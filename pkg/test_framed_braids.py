"""Tests for framed braid words, split forms and p-adic framed braids."""

import pytest

from src.core.errors import IncompatibleError, ParameterError, ParseError, PrecisionError
from src.core.framed_braids import (
    BraidLetter, FramedBraidWord, FramingLetter, SplitFramedBraid,
    elementary_framing_word, format_split, format_word, free_reduce, inverse_split,
    multiply_split, padic_approximants, padic_multiply, padic_project, padic_split,
    parse_word, pi_level_map, project_modular, split, split_identity, transport, word_at_level,
)
from src.core.padic import padic_from_int, residue
from src.core.symmetric import Perm


def test_parse_and_format():
    text = "f1^2 s2^-1 f2^{3^2:1,2}"
    word = parse_word(text, 3)
    assert word.letters[0] == FramingLetter(1, 2)
    assert word.letters[1] == BraidLetter(2, -1)
    assert format_word(word) == text
    assert format_word(parse_word("f1 s1", 2)) == "f1^1 s1"


def test_parse_expands_braid_powers():
    assert parse_word("s1^3", 2).letters == (BraidLetter(1, 1),) * 3
    assert parse_word("s1^-2", 2).letters == (BraidLetter(1, -1),) * 2
    assert parse_word("   ", 2).letters == ()


def test_parse_errors():
    with pytest.raises(ParseError) as excinfo:
        parse_word("s1 x2", 3)
    assert excinfo.value.column == 4
    with pytest.raises(ParseError):
        parse_word("s1^0", 2)
    with pytest.raises(ParseError):
        parse_word("f1^{3^2:1}", 2)
    with pytest.raises(ParameterError):
        parse_word("s3", 3)
    with pytest.raises(ParameterError):
        parse_word("f4", 3)


def test_split_pushes_framings_left():
    x = split(parse_word("s1 f1", 3))
    assert x.framing == (0, 1, 0)
    assert x.braid == (BraidLetter(1, 1),)
    assert x.perm == Perm((2, 1, 3))
    assert format_split(x) == "framing (0,1,0) braid s1"


def test_split_modular():
    x = split(parse_word("f1^5 f2^-1", 2), modulus=3)
    assert x.framing == (2, 2)
    assert format_split(x) == "framing (2,2) (mod 3) braid 1"


def test_elementary_framing_word():
    for i in range(1, 5):
        x = split(elementary_framing_word(i, 4))
        assert x.braid == ()
        assert x.framing == tuple(1 if j == i else 0 for j in range(1, 5))


def test_transport():
    assert transport(Perm((2, 3, 1)), [10, 20, 30]) == [30, 10, 20]


def test_free_reduce():
    letters = (BraidLetter(1), BraidLetter(2), BraidLetter(2, -1), BraidLetter(1, -1), BraidLetter(1))
    assert free_reduce(letters) == (BraidLetter(1),)


@pytest.mark.parametrize("n, modulus", [(1, None), (2, None), (3, None), (3, 4), (4, 2)])
def test_split_is_multiplicative(sampler, n, modulus):
    for _ in range(50):
        a, b = sampler.word(n, 8), sampler.word(n, 8)
        assert split(a * b, modulus) == multiply_split(split(a, modulus), split(b, modulus))


@pytest.mark.parametrize("n, modulus", [(2, None), (3, None), (3, 5)])
def test_split_inverse(sampler, n, modulus):
    for _ in range(50):
        word = sampler.word(n, 8)
        x = split(word, modulus)
        assert split(word.inverse(), modulus) == inverse_split(x)
        assert x * inverse_split(x) == split_identity(n, modulus)


def test_associativity(sampler):
    for _ in range(50):
        x, y, z = (split(sampler.word(3, 6), 6) for _ in range(3))
        assert (x * y) * z == x * (y * z)


def test_incompatible_products():
    with pytest.raises(IncompatibleError):
        multiply_split(split_identity(2), split_identity(3))
    with pytest.raises(IncompatibleError):
        multiply_split(split_identity(2, 3), split_identity(2, 4))
    with pytest.raises(IncompatibleError):
        parse_word("s1", 2) * parse_word("s1", 3)


def test_split_rejects_bad_framings():
    with pytest.raises(ParameterError):
        SplitFramedBraid(2, (0,))
    with pytest.raises(ParameterError):
        SplitFramedBraid(2, (0, 3), (), 3)
    with pytest.raises(ParameterError):
        split(parse_word("f1^{3^2:1,1}", 1))


def test_projection_and_level_maps(sampler):
    for _ in range(30):
        a, b = sampler.word(3, 8), sampler.word(3, 8)
        x, y = split(a, 27), split(b, 27)
        for s in range(4):
            assert pi_level_map(x * y, 3, s) == pi_level_map(x, 3, s) * pi_level_map(y, 3, s)
        assert pi_level_map(pi_level_map(x, 3, 2), 3, 1) == pi_level_map(x, 3, 1)
        assert project_modular(split(a), 9) == split(a, 9)


def test_level_map_errors():
    x = split(parse_word("f1^4", 1), 9)
    assert pi_level_map(x, 3, 1).framing == (1,)
    assert pi_level_map(x, 3, 0).framing == (0,)
    with pytest.raises(PrecisionError):
        pi_level_map(x, 3, 3)
    with pytest.raises(IncompatibleError):
        pi_level_map(x, 2, 1)
    with pytest.raises(IncompatibleError):
        pi_level_map(split(parse_word("f1", 1)), 3, 1)
    with pytest.raises(IncompatibleError):
        project_modular(x, 2)


def test_padic_split_projections():
    x = padic_split(parse_word("s1 f1^{3^2:1,1}", 2), 3, 2)
    assert x.p == 3
    assert x.precision == 2
    assert x.framings[0] == padic_from_int(0, 3, 2)
    assert x.framings[1].residues() == [1, 4]
    assert padic_project(x, 1) == SplitFramedBraid(2, (0, 1), (BraidLetter(1),), 3)
    assert padic_project(x, 2) == SplitFramedBraid(2, (0, 4), (BraidLetter(1),), 9)


def test_padic_split_errors():
    with pytest.raises(PrecisionError):
        padic_split(parse_word("f1^{3^2:1,1}", 1), 3, 3)
    with pytest.raises(IncompatibleError):
        padic_split(parse_word("f1^{3^2:1,1}", 1), 2, 2)


def test_padic_projection_is_multiplicative(sampler):
    for _ in range(30):
        a, b = sampler.word(3, 8), sampler.word(3, 8)
        x, y = padic_split(a, 2, 3), padic_split(b, 2, 3)
        xy = padic_multiply(x, y)
        assert xy == padic_split(a * b, 2, 3)
        for r in range(1, 4):
            assert padic_project(xy, r) == padic_project(x, r) * padic_project(y, r)


def test_padic_approximants_agree_below_level():
    b = padic_from_int(13, 3, 3)
    x = padic_split(FramedBraidWord(2, (BraidLetter(1), FramingLetter(1, b))), 3, 3)
    for k in range(1, 4):
        approx = padic_approximants(x, k)
        assert approx.modulus is None
        for r in range(1, k + 1):
            assert project_modular(approx, 3 ** r) == padic_project(x, r)
    with pytest.raises(PrecisionError):
        padic_approximants(x, 4)


def test_word_at_level():
    word = parse_word("f1^{2^3:1,0,1} s1", 2)
    level = word_at_level(word, 2, 2)
    assert level.letters[0] == FramingLetter(1, residue(padic_from_int(5, 2, 3), 2))
    assert split(level, 4) == padic_project(padic_split(word, 2, 3), 2)
    with pytest.raises(PrecisionError):
        word_at_level(word, 2, 4)
