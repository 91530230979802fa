"""Tests for Yokonuma-Hecke algebra arithmetic in normal form."""

from fractions import Fraction

import pytest

from src.core.coeff import U
from src.core.errors import IncompatibleError, ParameterError, PrecisionError
from src.core.framed_braids import FramedBraidWord, FramingLetter, BraidLetter, parse_word, split
from src.core.symmetric import Perm, perm_identity, reduced_word
from src.core.yokonuma import (
    YBasisElt, YElement, YParams, basis, basis_cache_info, conjugated_framing, framing_average,
    hecke_quadratic, mul_basis_g, mul_basis_t, phi_map, relation_suite, y_basis, y_e,
    y_e_conjugate_form, y_eval_word, y_g, y_g_inverse, y_one, y_product, y_t,
    y_t_monomial,
)

RELATION_GRID = [
    (1, 2), (1, 3), (1, 4),
    (2, 2), (2, 3), (2, 4),
    (3, 2), (3, 3), (3, 4),
    (4, 2),
]


def test_params_validation():
    assert YParams(2, 3).dimension == 48
    assert str(YParams(2, 2)) == "Y(d=2, n=2)"
    with pytest.raises(ParameterError):
        YParams(0, 2)
    with pytest.raises(ParameterError):
        YParams(2, 0)


def test_basis_enumeration():
    params = YParams(2, 3)
    elements = list(basis(params))
    assert len(elements) == params.dimension
    assert len(set(elements)) == params.dimension


def test_basis_element_render():
    assert YBasisElt((0, 0), perm_identity(2)).render() == "1"
    assert YBasisElt((1, 0), Perm((2, 1))).render() == "t(1,0)*g[2,1]"
    assert YBasisElt((0, 2), perm_identity(2)).render() == "t(0,2)"


@pytest.mark.parametrize("d, n", RELATION_GRID)
def test_relation_suite(d, n):
    report = relation_suite(YParams(d, n))
    assert report.all_passed, [f"{r.name}: {r.detail}" for r in report.failures()]
    assert {r.name for r in report.results} >= {"quadratic", "inverse", "idempotents", "braid_relations"}


def test_hecke_quadratic_only_at_d1():
    assert hecke_quadratic(YParams(1, 3), 2).is_zero()
    assert not hecke_quadratic(YParams(2, 2), 1).is_zero()


def test_quadratic_and_inverse(small_params):
    one = y_one(small_params)
    for i in range(1, small_params.n):
        g, e = y_g(small_params, i), y_e(small_params, i, i + 1)
        assert g * g == one + (e - e * g).scale(U - 1)
        assert g * y_g_inverse(small_params, i) == one
        assert y_g_inverse(small_params, i) * g == one


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_idempotents(d, n):
    params = YParams(d, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j:
                e = y_e(params, i, j)
                assert e * e == e
                assert e == y_e(params, j, i)


def test_eval_renderings():
    assert y_eval_word(parse_word("s1 s1", 2), YParams(1, 2)).render() == "u - (u - 1)*g[2,1]"
    assert y_eval_word(parse_word("s1 s1", 2), YParams(2, 2)).render() == (
        "(1/2*u + 1/2) + (1/2*u - 1/2)*t(1,1) - (1/2*u - 1/2)*g[2,1]"
        " - (1/2*u - 1/2)*t(1,1)*g[2,1]")
    assert y_e(YParams(2, 2), 1, 2).render() == "1/2 + 1/2*t(1,1)"
    assert y_g_inverse(YParams(1, 2), 1).render() == "(1 - u^-1) + u^-1*g[2,1]"
    assert YElement(YParams(2, 2)).render() == "0"


def test_t_generators():
    params = YParams(3, 2)
    t1 = y_t(params, 1)
    assert t1 ** 3 == y_one(params)
    assert y_t(params, 1, -1) == t1 * t1
    assert y_t_monomial(params, [1, 2]) == y_t(params, 1) * y_t(params, 2, 2)
    with pytest.raises(ParameterError):
        y_t_monomial(params, [1])


def test_index_errors():
    params = YParams(2, 3)
    with pytest.raises(ParameterError):
        y_e(params, 2, 2)
    with pytest.raises(ParameterError):
        y_g(params, 3)
    with pytest.raises(ParameterError):
        y_t(params, 4)
    with pytest.raises(ParameterError):
        YElement(params, {YBasisElt((0, 2, 0), perm_identity(3)): 1})
    with pytest.raises(ParameterError):
        y_basis(params, YBasisElt((0, 0), perm_identity(2)))


def test_mismatched_algebras():
    with pytest.raises(IncompatibleError):
        y_one(YParams(2, 2)) * y_one(YParams(3, 2))
    with pytest.raises(IncompatibleError):
        y_one(YParams(2, 2)) + y_one(YParams(2, 3))


def test_scalars_and_powers():
    params = YParams(2, 2)
    g = y_g(params, 1)
    assert U * g == g.scale(U)
    assert g * Fraction(1, 2) == g.scale(Fraction(1, 2))
    assert (g - g).is_zero()
    assert g ** 0 == y_one(params)
    assert g ** 2 == g * g
    with pytest.raises(ParameterError):
        g ** -1


@pytest.mark.parametrize("d, n", [(2, 3), (3, 3)])
def test_associativity(sampler, d, n):
    params = YParams(d, n)
    for _ in range(500):
        x, y, z = (sampler.element(params) for _ in range(3))
        assert (x * y) * z == x * (y * z)
    assert basis_cache_info().currsize > 0


def test_distributivity(sampler):
    params = YParams(2, 3)
    for _ in range(100):
        x, y, z = (sampler.element(params) for _ in range(3))
        assert x * (y + z) == x * y + x * z
        assert (x + y) * z == x * z + y * z


@pytest.mark.parametrize("d, n", [(2, 2), (3, 3), (4, 3)])
def test_mul_basis_t_matches_framed_braid_split(sampler, d, n):
    params = YParams(d, n)
    for _ in range(100):
        b = sampler.basis_elt(params)
        j = sampler.integer(1, n)
        m = sampler.integer(-d, d)
        letters = [FramingLetter(k, a) for k, a in enumerate(b.framing, start=1)]
        letters.extend(BraidLetter(i) for i in reduced_word(b.perm))
        letters.append(FramingLetter(j, m))
        expected = split(FramedBraidWord(n, tuple(letters)), d)
        moved = mul_basis_t(b, j, m, d)
        assert moved.framing == expected.framing
        assert moved.perm == b.perm == expected.perm


def test_mul_basis_g_length_increase():
    params = YParams(2, 3)
    b = YBasisElt((1, 0, 1), Perm((1, 3, 2)))
    assert mul_basis_g(b, 1, params) == y_basis(params, YBasisElt((1, 0, 1), Perm((3, 1, 2))))
    # the m = 0 term of the shorter element merges with the leading term
    assert len(mul_basis_g(b, 2, params)) == 2 * params.d


def test_eval_word_is_multiplicative(sampler, small_params):
    for _ in range(30):
        a, b = sampler.word(small_params.n, 6), sampler.word(small_params.n, 6)
        assert y_eval_word(a * b, small_params) == y_eval_word(a, small_params) * y_eval_word(b, small_params)
        assert y_eval_word(a * a.inverse(), small_params) == y_one(small_params)


def test_eval_word_generators():
    params = YParams(3, 3)
    assert y_eval_word(parse_word("f2^4", 3), params) == y_t(params, 2)
    assert y_eval_word(parse_word("s2^-1", 3), params) == y_g_inverse(params, 2)
    assert y_eval_word(parse_word("s1 s2", 3), params) == y_product(params, [y_g(params, 1), y_g(params, 2)])


def test_eval_word_errors():
    with pytest.raises(IncompatibleError):
        y_eval_word(parse_word("s1", 2), YParams(2, 3))
    with pytest.raises(ParameterError):
        y_eval_word(parse_word("f1^{2^2:1,1}", 2), YParams(2, 2))


def test_phi_map_reduces_framings():
    assert phi_map(y_e(YParams(4, 2), 1, 2), 2, 1) == y_e(YParams(2, 2), 1, 2)
    assert phi_map(y_t(YParams(9, 2), 2, 4), 3, 1) == y_t(YParams(3, 2), 2, 1)
    x = y_g(YParams(4, 2), 1)
    assert phi_map(x, 2, 2) is x
    assert phi_map(y_t(YParams(4, 2), 1, 3), 2, 0) == y_one(YParams(1, 2))


def test_phi_map_errors():
    with pytest.raises(IncompatibleError):
        phi_map(y_one(YParams(6, 2)), 2, 1)
    with pytest.raises(PrecisionError):
        phi_map(y_one(YParams(4, 2)), 2, 3)


def test_phi_map_is_homomorphism(sampler):
    params = YParams(4, 3)
    for _ in range(50):
        x, y = sampler.element(params), sampler.element(params)
        assert phi_map(x * y, 2, 1) == phi_map(x, 2, 1) * phi_map(y, 2, 1)


@pytest.mark.parametrize("d", [1, 2, 3])
def test_conjugated_framing_conventions(d):
    params = YParams(d, 4)
    for i in range(1, 5):
        assert conjugated_framing(params, i, "presentation") == y_t(params, i)
    for i in range(1, 4):
        assert conjugated_framing(params, i, "shifted") == y_t(params, i + 1)
    with pytest.raises(ParameterError):
        conjugated_framing(params, 4, "shifted")
    with pytest.raises(ParameterError):
        conjugated_framing(params, 1, "other")


@pytest.mark.parametrize("d, n", [(2, 3), (3, 3), (2, 4)])
def test_e_conjugate_form(d, n):
    params = YParams(d, n)
    for i in range(1, n):
        assert y_e_conjugate_form(params, i) == y_e(params, i, i + 1)


def test_framing_average_over_full_period_is_e():
    params = YParams(4, 3)
    assert framing_average(params, 1, 2, 4) == y_e(params, 1, 2)
    assert framing_average(params, 1, 2, 1) == y_one(params)
