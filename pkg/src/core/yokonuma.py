"""
Yokonuma-Hecke algebra Y_{d,n}(u) in normal form.

Elements are combinations of basis elements t_1^{a_1}...t_n^{a_n} g_w with
Laurent coefficients in u. Multiplication folds the right factor into the left
one: framings are transported through the left permutation, then the
canonical reduced word of the right permutation is applied one generator at a
time, expanding descents with the quadratic relation

    g_w g_i = g_{w s_i} + (u - 1)(g_{w s_i} - g_w) e_{d,i}    when w(i) > w(i+1).

Generators commute with framings as g_w t_j = t_{w(j)} g_w.
"""

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .coeff import LaurentU, Scalar, ONE, U, U_INV, ZERO, render_coefficient
from .errors import IncompatibleError, ParameterError, PrecisionError
from .framed_braids import FramedBraidWord, FramingLetter
from .symmetric import (
    Perm, all_perms, format_perm, perm_identity, reduced_word, simple_reflection,
    swap_right,
)
from ..config.config import BASIS_PRODUCT_CACHE_SIZE, prime_power_exponent
from ..utils.logger import get_logger

logger = get_logger('yokonuma')


@dataclass(frozen=True)
class YParams:
    """Framing modulus d and strand count n."""
    d: int
    n: int

    def __post_init__(self):
        if self.d < 1:
            raise ParameterError(f"Framing modulus d must be >= 1, got {self.d}")
        if self.n < 1:
            raise ParameterError(f"Strand count n must be >= 1, got {self.n}")

    @property
    def dimension(self) -> int:
        """d^n * n! basis elements."""
        size = self.d ** self.n
        for k in range(2, self.n + 1):
            size *= k
        return size

    def __str__(self):
        return f"Y(d={self.d}, n={self.n})"


@dataclass(frozen=True)
class YBasisElt:
    """t_1^{a_1}...t_n^{a_n} g_w with residues a_i in [0, d)."""
    framing: Tuple[int, ...]
    perm: Perm

    def render(self) -> str:
        parts = []
        if any(self.framing):
            parts.append("t(" + ",".join(str(a) for a in self.framing) + ")")
        if self.perm.images != tuple(range(1, self.perm.n + 1)):
            parts.append(f"g{format_perm(self.perm)}")
        return "*".join(parts) or "1"

    def sort_key(self):
        return (self.perm.images, self.framing)


class YElement:
    """A linear combination of basis elements of one Y_{d,n}(u); zero terms are never stored."""

    __slots__ = ('params', '_terms')

    def __init__(self, params: YParams, terms: Optional[Dict[YBasisElt, Scalar]] = None):
        self.params = params
        clean: Dict[YBasisElt, LaurentU] = {}
        if terms:
            for basis_elt, coeff in terms.items():
                _check_basis(params, basis_elt)
                _accumulate(clean, basis_elt, LaurentU.coerce(coeff))
        self._terms = clean

    @classmethod
    def _wrap(cls, params: YParams, clean: Dict[YBasisElt, LaurentU]) -> "YElement":
        obj = cls.__new__(cls)
        obj.params = params
        obj._terms = clean
        return obj

    @property
    def terms(self) -> Dict[YBasisElt, LaurentU]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[YBasisElt, LaurentU]]:
        return iter(self._terms.items())

    def coefficient(self, basis_elt: YBasisElt) -> LaurentU:
        return self._terms.get(basis_elt, ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def _check(self, other: "YElement"):
        if self.params != other.params:
            raise IncompatibleError(f"Elements of different algebras: {self.params} vs {other.params}")

    def __eq__(self, other):
        if not isinstance(other, YElement):
            return NotImplemented
        return self.params == other.params and self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, YElement):
            return NotImplemented
        self._check(other)
        result = dict(self._terms)
        for basis_elt, coeff in other._terms.items():
            _accumulate(result, basis_elt, coeff)
        return YElement._wrap(self.params, result)

    def __neg__(self):
        return YElement._wrap(self.params, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, YElement):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: Scalar) -> "YElement":
        factor = LaurentU.coerce(factor)
        result = {}
        for basis_elt, coeff in self._terms.items():
            value = coeff * factor
            if value:
                result[basis_elt] = value
        return YElement._wrap(self.params, result)

    def __mul__(self, other):
        if isinstance(other, YElement):
            return y_mul(self, other)
        if isinstance(other, (int, Fraction, LaurentU)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentU)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ParameterError("Algebra elements only take non-negative integer powers")
        result = y_one(self.params)
        for _ in range(exponent):
            result = y_mul(result, self)
        return result

    def render(self) -> str:
        """
        Canonical text: terms sorted by (permutation, framing), e.g.
        `u - (u - 1)*g[2,1]` or `1/2 + 1/2*t(1,1)`.
        """
        if not self._terms:
            return "0"
        pieces = []
        for basis_elt in sorted(self._terms, key=YBasisElt.sort_key):
            coeff = self._terms[basis_elt]
            mono = basis_elt.render()
            if mono == "1":
                pieces.append(coeff.render() if len(self._terms) == 1 else render_coefficient(coeff))
            elif coeff == 1:
                pieces.append(mono)
            elif coeff == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{render_coefficient(coeff)}*{mono}")
        text = pieces[0]
        for piece in pieces[1:]:
            text += (" - " + piece[1:]) if piece.startswith("-") else (" + " + piece)
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"YElement({self.params}, {self.render()!r})"


def _accumulate(terms: Dict[YBasisElt, LaurentU], basis_elt: YBasisElt, coeff: LaurentU):
    total = terms.get(basis_elt, ZERO) + coeff
    if total:
        terms[basis_elt] = total
    else:
        terms.pop(basis_elt, None)


def _check_basis(params: YParams, basis_elt: YBasisElt):
    if len(basis_elt.framing) != params.n or basis_elt.perm.n != params.n:
        raise ParameterError(f"Basis element {basis_elt.render()} does not live in {params}")
    if any(not 0 <= a < params.d for a in basis_elt.framing):
        raise ParameterError(f"Framing residues must lie in 0..{params.d - 1}")


def _check_index(params: YParams, i: int, top: int):
    if not 1 <= i <= top:
        raise ParameterError(f"Index {i} outside 1..{top} for {params}")


def basis(params: YParams) -> Iterator[YBasisElt]:
    """All d^n * n! basis elements, permutation-major."""
    for perm in all_perms(params.n):
        for framing in itertools.product(range(params.d), repeat=params.n):
            yield YBasisElt(framing, perm)


# ============== CONSTRUCTORS ==============
def identity_basis(params: YParams) -> YBasisElt:
    return YBasisElt((0,) * params.n, perm_identity(params.n))


def y_one(params: YParams) -> YElement:
    return YElement._wrap(params, {identity_basis(params): ONE})


def y_t(params: YParams, i: int, m: int = 1) -> YElement:
    """t_i^m; the exponent is read mod d."""
    _check_index(params, i, params.n)
    framing = [0] * params.n
    framing[i - 1] = m % params.d
    return YElement._wrap(params, {YBasisElt(tuple(framing), perm_identity(params.n)): ONE})


def y_t_monomial(params: YParams, exponents: Iterable[int]) -> YElement:
    """t_1^{m_1}...t_n^{m_n}."""
    framing = tuple(m % params.d for m in exponents)
    if len(framing) != params.n:
        raise ParameterError(f"Expected {params.n} exponents, got {len(framing)}")
    return YElement._wrap(params, {YBasisElt(framing, perm_identity(params.n)): ONE})


def y_g(params: YParams, i: int) -> YElement:
    _check_index(params, i, params.n - 1)
    basis_elt = YBasisElt((0,) * params.n, simple_reflection(params.n, i))
    return YElement._wrap(params, {basis_elt: ONE})


def y_basis(params: YParams, basis_elt: YBasisElt) -> YElement:
    _check_basis(params, basis_elt)
    return YElement._wrap(params, {basis_elt: ONE})


def y_e(params: YParams, i: int, j: int) -> YElement:
    """
    The idempotent e_{d,i,j} = (1/d) sum_m t_i^m t_j^{-m}.

    Raises:
        ParameterError: if i == j or an index is out of range
    """
    _check_index(params, i, params.n)
    _check_index(params, j, params.n)
    if i == j:
        raise ParameterError(f"e_{{d,i,j}} needs i != j, got i = j = {i}")
    return framing_average(params, i, j, params.d)


def framing_average(params: YParams, i: int, j: int, count: int) -> YElement:
    """(1/count) sum_{m < count} t_i^m t_j^{-m}, framings read mod d."""
    weight = LaurentU.constant(Fraction(1, count))
    identity = perm_identity(params.n)
    terms: Dict[YBasisElt, LaurentU] = {}
    for m in range(count):
        framing = [0] * params.n
        framing[i - 1] = m % params.d
        framing[j - 1] = (-m) % params.d
        _accumulate(terms, YBasisElt(tuple(framing), identity), weight)
    return YElement._wrap(params, terms)


def y_g_inverse(params: YParams, i: int) -> YElement:
    """g_i^{-1} = g_i - (u^{-1} - 1) e_{d,i} + (u^{-1} - 1) e_{d,i} g_i."""
    g = y_g(params, i)
    e = y_e(params, i, i + 1)
    c = U_INV - 1
    return g - e.scale(c) + y_mul(e, g).scale(c)


# ============== MULTIPLICATION ==============
def mul_basis_t(b: YBasisElt, j: int, m: int, d: int) -> YBasisElt:
    """t^a g_w * t_j^m = t^{a + m e_{w(j)}} g_w."""
    m %= d
    if not m:
        return b
    position = b.perm.images[j - 1] - 1
    framing = list(b.framing)
    framing[position] = (framing[position] + m) % d
    return YBasisElt(tuple(framing), b.perm)


def _times_e(b: YBasisElt, i: int, d: int) -> List[YBasisElt]:
    """The d basis elements of b * t_i^m t_{i+1}^{-m}, m = 0..d-1 (weight 1/d each)."""
    return [mul_basis_t(mul_basis_t(b, i, m, d), i + 1, -m, d) for m in range(d)]


def mul_basis_g(b: YBasisElt, i: int, params: YParams) -> YElement:
    """
    Right multiplication of a basis element by g_i.

    Args:
        b: Basis element t^a g_w
        i: Generator index
        params: Algebra parameters

    Returns:
        t^a g_{w s_i} if w(i) < w(i+1), otherwise the quadratic expansion
        t^a g_{w'} + (u - 1)(t^a g_{w'} - t^a g_w) e_{d,i} with w' = w s_i
    """
    return YElement._wrap(params, dict(_mul_basis_g_terms(b, i, params.d)))


@lru_cache(maxsize=BASIS_PRODUCT_CACHE_SIZE)
def _mul_basis_g_terms(b: YBasisElt, i: int, d: int) -> Tuple[Tuple[YBasisElt, LaurentU], ...]:
    shorter = YBasisElt(b.framing, swap_right(b.perm, i))
    if b.perm.images[i - 1] < b.perm.images[i]:
        return ((shorter, ONE),)
    terms: Dict[YBasisElt, LaurentU] = {shorter: ONE}
    weight = (U - 1) * Fraction(1, d)
    for term in _times_e(shorter, i, d):
        _accumulate(terms, term, weight)
    for term in _times_e(b, i, d):
        _accumulate(terms, term, -weight)
    return tuple(terms.items())


@lru_cache(maxsize=BASIS_PRODUCT_CACHE_SIZE)
def basis_product(d: int, left: YBasisElt, right: YBasisElt) -> Tuple[Tuple[YBasisElt, LaurentU], ...]:
    moved = left
    for j, m in enumerate(right.framing, start=1):
        moved = mul_basis_t(moved, j, m, d)
    current: Dict[YBasisElt, LaurentU] = {moved: ONE}
    for i in reduced_word(right.perm):
        folded: Dict[YBasisElt, LaurentU] = {}
        for basis_elt, coeff in current.items():
            for term, weight in _mul_basis_g_terms(basis_elt, i, d):
                _accumulate(folded, term, coeff * weight)
        current = folded
    return tuple(current.items())


def y_mul(x: YElement, y: YElement) -> YElement:
    """
    Product in Y_{d,n}(u), bilinear over cached basis products.

    Raises:
        IncompatibleError: if x and y live in different algebras
    """
    x._check(y)
    d = x.params.d
    result: Dict[YBasisElt, LaurentU] = {}
    for left, c_left in x._terms.items():
        for right, c_right in y._terms.items():
            coeff = c_left * c_right
            for term, weight in basis_product(d, left, right):
                _accumulate(result, term, coeff * weight)
    return YElement._wrap(x.params, result)


def basis_cache_info():
    return basis_product.cache_info()


def y_product(params: YParams, factors: Iterable[YElement]) -> YElement:
    result = y_one(params)
    for factor in factors:
        result = y_mul(result, factor)
    return result


def _right_t(x: YElement, j: int, m: int) -> YElement:
    d = x.params.d
    return YElement._wrap(x.params, {mul_basis_t(b, j, m, d): c for b, c in x._terms.items()})


def _right_g(x: YElement, i: int) -> YElement:
    d = x.params.d
    result: Dict[YBasisElt, LaurentU] = {}
    for basis_elt, coeff in x._terms.items():
        for term, weight in _mul_basis_g_terms(basis_elt, i, d):
            _accumulate(result, term, coeff * weight)
    return YElement._wrap(x.params, result)


def _right_e(x: YElement, i: int) -> YElement:
    d = x.params.d
    weight = Fraction(1, d)
    result: Dict[YBasisElt, LaurentU] = {}
    for basis_elt, coeff in x._terms.items():
        for term in _times_e(basis_elt, i, d):
            _accumulate(result, term, coeff * weight)
    return YElement._wrap(x.params, result)


def _right_g_inverse(x: YElement, i: int) -> YElement:
    c = U_INV - 1
    xe = _right_e(x, i)
    return _right_g(x, i) - xe.scale(c) + _right_g(xe, i).scale(c)


def y_eval_word(w: FramedBraidWord, params: YParams) -> YElement:
    """
    Image of a framed braid word under C F_{d,n} -> Y_{d,n}(u):
    f_i^e -> t_i^e, sigma_i -> g_i, sigma_i^{-1} -> g_i^{-1}.

    Raises:
        IncompatibleError: on a strand-count mismatch
        ParameterError: if the word carries p-adic framings
    """
    if w.n != params.n:
        raise IncompatibleError(f"Word on {w.n} strands evaluated in {params}")
    if w.has_padic_framings():
        raise ParameterError("Reduce p-adic framings to a level before evaluating")
    result = y_one(params)
    for letter in w.letters:
        if isinstance(letter, FramingLetter):
            result = _right_t(result, letter.index, letter.exponent)
        elif letter.sign == 1:
            result = _right_g(result, letter.index)
        else:
            result = _right_g_inverse(result, letter.index)
    return result


# ============== LEVEL MAPS ==============
def phi_map(x: YElement, p: int, s: int) -> YElement:
    """
    The connecting epimorphism Y_{p^r,n} -> Y_{p^s,n}: framings reduced mod p^s,
    coefficients unchanged.

    Raises:
        IncompatibleError: if d is not a power of p
        PrecisionError: if s > r
    """
    r = prime_power_exponent(x.params.d, p)
    if r is None:
        raise IncompatibleError(f"Modulus {x.params.d} is not a power of {p}")
    if not 0 <= s <= r:
        raise PrecisionError(f"Level {s} outside 0..{r}")
    if s == r:
        return x
    target = YParams(p ** s, x.params.n)
    result: Dict[YBasisElt, LaurentU] = {}
    for basis_elt, coeff in x._terms.items():
        framing = tuple(a % target.d for a in basis_elt.framing)
        _accumulate(result, YBasisElt(framing, basis_elt.perm), coeff)
    return YElement._wrap(target, result)


# ============== DERIVED ELEMENTS ==============
def conjugated_framing(params: YParams, i: int, convention: str = "presentation") -> YElement:
    """
    Conjugate of t_1 along g_1...g_k:

        "presentation": g_{i-1}...g_1 t_1 g_1^{-1}...g_{i-1}^{-1}  (equals t_i)
        "shifted":      g_i...g_1 t_1 g_1^{-1}...g_i^{-1}          (equals t_{i+1})
    """
    if convention == "presentation":
        depth = i - 1
        _check_index(params, i, params.n)
    elif convention == "shifted":
        depth = i
        _check_index(params, i, params.n - 1)
    else:
        raise ParameterError(f"Unknown convention {convention!r}, expected 'presentation' or 'shifted'")
    return _conjugate_t1(params, depth, 1, inverse_first=False)


def _conjugate_t1(params: YParams, depth: int, m: int, inverse_first: bool) -> YElement:
    """g_depth...g_1 t_1^m g_1^{-1}...g_depth^{-1}, or the same with inverses swapped."""
    left = y_one(params)
    for k in range(depth, 0, -1):
        left = _right_g_inverse(left, k) if inverse_first else _right_g(left, k)
    left = _right_t(left, 1, m)
    for k in range(1, depth + 1):
        left = _right_g(left, k) if inverse_first else _right_g_inverse(left, k)
    return left


def y_e_conjugate_form(params: YParams, i: int) -> YElement:
    """
    e_{d,i} written through conjugates of t_1:
    (1/d) sum_m (g_{i-1}^{-1}...g_1^{-1} t_1^m g_1...g_{i-1})(g_i...g_1 t_1^{-m} g_1^{-1}...g_i^{-1}).
    """
    _check_index(params, i, params.n - 1)
    total = YElement(params)
    for m in range(params.d):
        lower = _conjugate_t1(params, i - 1, m, inverse_first=True)
        upper = _conjugate_t1(params, i, -m, inverse_first=False)
        total = total + y_mul(lower, upper)
    return total.scale(Fraction(1, params.d))


def hecke_quadratic(params: YParams, i: int) -> YElement:
    """(g_i + u)(g_i - 1); zero when d = 1."""
    g = y_g(params, i)
    one = y_one(params)
    return y_mul(g + one.scale(U), g - one)


# ============== RELATION SUITE ==============
@dataclass
class CheckResult:
    """Outcome of one named identity check."""
    name: str
    passed: bool
    checked: int = 0
    detail: str = ""


@dataclass
class RelationReport:
    name: str
    results: List[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(result.passed for result in self.results)

    def failures(self) -> List[CheckResult]:
        return [result for result in self.results if not result.passed]

    def add(self, name: str, cases: Iterable[Tuple[str, object, object]]) -> CheckResult:
        """Record an identity from (label, lhs, rhs) cases; the first mismatch is kept as detail."""
        checked = 0
        detail = ""
        for label, lhs, rhs in cases:
            checked += 1
            if lhs != rhs:
                detail = f"{label}: {_show(lhs)} != {_show(rhs)}"
                break
        return self.record(name, not detail, checked, detail)

    def record(self, name: str, passed: bool, checked: int, detail: str = "") -> CheckResult:
        result = CheckResult(name, passed, checked, detail)
        self.results.append(result)
        log = logger.info if result.passed else logger.warning
        log(f"{self.name} {name}: {'pass' if result.passed else 'FAIL'} ({checked} cases)")
        return result


def _show(value) -> str:
    render = getattr(value, "render", None)
    return str(render()) if callable(render) else str(value)


def _swap_index(i: int, k: int) -> int:
    if k == i:
        return i + 1
    if k == i + 1:
        return i
    return k


def relation_suite(params: YParams) -> RelationReport:
    """
    Check the defining presentation and the main commutation rules as exact identities.

    Args:
        params: Small algebra parameters

    Returns:
        RelationReport with one CheckResult per relation family
    """
    d, n = params.d, params.n
    report = RelationReport(f"relations {params}")
    one = y_one(params)
    g = {i: y_g(params, i) for i in range(1, n)}
    g_inv = {i: y_g_inverse(params, i) for i in range(1, n)}
    e = {i: y_e(params, i, i + 1) for i in range(1, n)}
    t1 = y_t(params, 1)

    report.add("braid_relations", itertools.chain(
        ((f"g{i} g{i+1} g{i}", g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1])
         for i in range(1, n - 1)),
        ((f"g{i} g{j}", g[i] * g[j], g[j] * g[i])
         for i in range(1, n) for j in range(i + 2, n)),
    ))
    report.add("t1_commutes_far", (
        (f"t1 g{i}", t1 * g[i], g[i] * t1) for i in range(2, n)))
    if n >= 2:
        report.add("t1_g1_relation", [(
            "t1 g1 t1 g1^-1",
            y_product(params, [t1, g[1], t1, g_inv[1]]),
            y_product(params, [g[1], t1, g_inv[1], t1]),
        )])
    report.add("t1_order", [("t1^d", t1 ** d, one)])
    report.add("conjugated_framing_commutation", (
        (f"i={i}",
         y_product(params, [g[i], conjugated_framing(params, i), g_inv[i]]),
         y_product(params, [g_inv[i], conjugated_framing(params, i), g[i]]))
        for i in range(1, n)))
    report.add("conjugated_framing_is_t", (
        (f"t{i}", conjugated_framing(params, i), y_t(params, i)) for i in range(1, n + 1)))
    report.add("quadratic", (
        (f"g{i}^2", g[i] * g[i], one + (e[i] * (one - g[i])).scale(U - 1))
        for i in range(1, n)))
    report.add("inverse", itertools.chain.from_iterable(
        [(f"g{i} g{i}^-1", g[i] * g_inv[i], one), (f"g{i}^-1 g{i}", g_inv[i] * g[i], one)]
        for i in range(1, n)))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    report.add("idempotents", (
        (f"e{i},{j}", y_e(params, i, j) * y_e(params, i, j), y_e(params, i, j)) for i, j in pairs))
    report.add("e_symmetric", (
        (f"e{i},{j}", y_e(params, i, j), y_e(params, j, i)) for i, j in pairs))
    report.add("e_commutes", (
        (f"g{i}^{label} e{j}", h * e[j], e[j] * h)
        for i in range(1, n) for j in range(1, n) if abs(i - j) != 1
        for label, h in (("+1", g[i]), ("-1", g_inv[i]))))
    report.add("e_index_swap_left", (
        (f"g{i}^{label} e{j}", h * e[j],
         y_e(params, _swap_index(i, j), _swap_index(i, j + 1)) * h)
        for i in range(1, n) for j in range(1, n) if abs(i - j) == 1
        for label, h in (("+1", g[i]), ("-1", g_inv[i]))))
    report.add("e_index_swap_right", (
        (f"e{j} g{i}^{label}", e[j] * h,
         h * y_e(params, _swap_index(i, j), _swap_index(i, j + 1)))
        for i in range(1, n) for j in range(1, n) if abs(i - j) == 1
        for label, h in (("+1", g[i]), ("-1", g_inv[i]))))
    report.add("e_framing_swap", (
        (f"e{i} t{framing}", e[i] * y_t_monomial(params, framing),
         e[i] * y_t_monomial(params, _swap_pair(framing, i)))
        for i in range(1, n)
        for framing in itertools.product(range(d), repeat=n)))
    report.add("e_conjugate_form", (
        (f"e{i}", y_e_conjugate_form(params, i), e[i]) for i in range(1, n)))
    if d == 1:
        report.add("hecke_quadratic", (
            (f"(g{i}+u)(g{i}-1)", hecke_quadratic(params, i), YElement(params))
            for i in range(1, n)))
    return report


def _swap_pair(framing: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    swapped = list(framing)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return tuple(swapped)


if __name__ == "__main__":
    params = YParams(2, 2)
    g1 = y_g(params, 1)
    print(f"g1^2 in {params}: {g1 * g1}")
    print(f"g1^-1: {y_g_inverse(params, 1)}")
    print(f"g1 g1^-1 = {g1 * y_g_inverse(params, 1)}")
    report = relation_suite(YParams(2, 3))
    for result in report.results:
        print(f"  {result.name}: {'pass' if result.passed else 'FAIL'}")
