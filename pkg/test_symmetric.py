"""Tests for permutations, reduced words and the coset decomposition."""

import pytest

from src.core.errors import IncompatibleError, ParameterError, ParseError
from src.core.symmetric import (
    CosetFactor, InSubgroup, Perm, all_perms, coset_decompose, extend, format_perm, length,
    longest_element, parse_perm, perm_apply, perm_compose, perm_from_word, perm_identity,
    perm_inverse, reduced_word, reduced_words, restrict, right_descent, simple_reflection, staircase,
)
from src.core.yokonuma import YParams, _right_g, y_one


def test_composition_convention():
    assert perm_from_word(3, [1, 2]) == Perm((2, 3, 1))
    s1, s2 = simple_reflection(3, 1), simple_reflection(3, 2)
    assert perm_compose(s1, s2) == Perm((2, 3, 1))
    assert s1 * s2 == perm_from_word(3, [1, 2])


def test_perm_apply():
    w = Perm((2, 3, 1))
    assert [perm_apply(w, j) for j in (1, 2, 3)] == [2, 3, 1]
    v = simple_reflection(3, 1)
    assert all(perm_apply(perm_compose(w, v), j) == perm_apply(w, perm_apply(v, j)) for j in (1, 2, 3))
    with pytest.raises(ParameterError):
        perm_apply(w, 4)
    with pytest.raises(ParameterError):
        perm_apply(w, 0)


def test_perm_validation():
    with pytest.raises(ParameterError):
        Perm((1, 1, 2))
    with pytest.raises(ParameterError):
        simple_reflection(3, 3)
    with pytest.raises(IncompatibleError):
        perm_compose(perm_identity(2), perm_identity(3))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_reduced_word_spells_w(n):
    for w in all_perms(n):
        word = reduced_word(w)
        assert len(word) == length(w)
        assert perm_from_word(n, word) == w


@pytest.mark.parametrize("n", [2, 3, 4])
def test_inverse(n):
    for w in all_perms(n):
        assert perm_compose(w, perm_inverse(w)) == perm_identity(n)
        assert length(perm_inverse(w)) == length(w)


def test_right_descent_matches_length():
    for w in all_perms(4):
        for i in range(1, 4):
            shorter = length(perm_compose(w, simple_reflection(4, i))) < length(w)
            assert right_descent(w, i) == shorter


def test_coset_decompose_example():
    assert coset_decompose(Perm((3, 1, 2))) == CosetFactor(perm_identity(2), 1)
    assert coset_decompose(Perm((2, 1, 3))) == InSubgroup(Perm((2, 1)))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_coset_decompose_factorizes(n):
    for w in all_perms(n):
        part = coset_decompose(w)
        if isinstance(part, InSubgroup):
            assert w(n) == n
            assert extend(part.perm, n) == w
            continue
        assert part.k == perm_inverse(w)(n)
        c_k = perm_from_word(n, staircase(n, part.k))
        assert perm_compose(extend(part.v, n), c_k) == w
        assert length(w) == length(part.v) + (n - part.k)


def test_coset_decompose_needs_two_strands():
    with pytest.raises(ParameterError):
        coset_decompose(perm_identity(1))


def test_restrict_and_extend():
    assert restrict(Perm((2, 1, 3))) == Perm((2, 1))
    assert extend(Perm((2, 1)), 4) == Perm((2, 1, 3, 4))
    with pytest.raises(ParameterError):
        restrict(Perm((3, 1, 2)))


def test_reduced_words_of_longest_element():
    assert sorted(reduced_words(longest_element(3))) == [(1, 2, 1), (2, 1, 2)]
    words = reduced_words(longest_element(4))
    assert len(words) == 16
    assert all(perm_from_word(4, word) == longest_element(4) for word in words)


def test_perm_text_format():
    w = Perm((3, 1, 2))
    assert format_perm(w) == "[3,1,2]"
    assert parse_perm(" [3, 1, 2] ") == w
    with pytest.raises(ParseError):
        parse_perm("3,1,2")
    with pytest.raises(ParameterError):
        parse_perm("[1,1]")


def _fold(params, word):
    element = y_one(params)
    for i in word:
        element = _right_g(element, i)
    return element


def _assert_words_agree(params, w):
    words = reduced_words(w)
    first = _fold(params, words[0])
    assert all(_fold(params, word) == first for word in words[1:]), format_perm(w)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_reduced_words_give_one_element_in_s3(d):
    params = YParams(d, 3)
    for w in all_perms(3):
        _assert_words_agree(params, w)


def test_reduced_words_give_one_element_in_s4(rng):
    params = YParams(2, 4)
    perms = list(all_perms(4))
    for index in rng.choice(len(perms), size=12, replace=False):
        _assert_words_agree(params, perms[int(index)])
    _assert_words_agree(params, longest_element(4))
