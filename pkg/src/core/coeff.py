"""
Exact coefficient arithmetic.
Rationals, Laurent polynomials in the deformation parameter u, and the sparse
trace polynomials in z and x_1..x_{d-1} that Markov traces take values in.
"""

import re
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from .errors import IncompatibleError, ParameterError, ParseError
from ..config.config import U_SYMBOL, Z_SYMBOL, X_PREFIX
from ..utils.logger import get_logger

logger = get_logger('coeff')

Scalar = Union[int, Fraction, "LaurentU"]

# (z-exponent, ((x-index, exponent), ...)) with x-indices strictly increasing
MonomialKey = Tuple[int, Tuple[Tuple[int, int], ...]]


class LaurentU:
    """A Laurent polynomial in u with rational coefficients, kept canonical."""

    __slots__ = ('_terms', '_hash')

    def __init__(self, terms: Optional[Mapping[int, Union[int, Fraction]]] = None):
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    clean[int(exp)] = coeff
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, clean: Dict[int, Fraction]) -> "LaurentU":
        obj = cls.__new__(cls)
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, value: Union[int, Fraction]) -> "LaurentU":
        return cls({0: value})

    @classmethod
    def u_power(cls, exponent: int, coeff: Union[int, Fraction] = 1) -> "LaurentU":
        return cls({exponent: coeff})

    @classmethod
    def coerce(cls, value: Scalar) -> "LaurentU":
        if isinstance(value, LaurentU):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"Cannot use {type(value).__name__} as a Laurent coefficient")

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_negative(self) -> bool:
        """True when the coefficient of the highest u-power is negative."""
        return bool(self._terms) and self._terms[max(self._terms)] < 0

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentU.constant(other)
        if not isinstance(other, LaurentU):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentU.constant(other)
        if not isinstance(other, LaurentU):
            return NotImplemented
        result = dict(self._terms)
        for exp, coeff in other._terms.items():
            total = result.get(exp, 0) + coeff
            if total:
                result[exp] = total
            else:
                result.pop(exp, None)
        return LaurentU._wrap(result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentU._wrap({exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentU.constant(other)
        if not isinstance(other, LaurentU):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentU._wrap({})
            return LaurentU._wrap({exp: coeff * other for exp, coeff in self._terms.items()})
        if not isinstance(other, LaurentU):
            return NotImplemented
        result: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                result[exp] = result.get(exp, 0) + c1 * c2
        return LaurentU._wrap({exp: c for exp, c in result.items() if c})

    __rmul__ = __mul__

    def render(self) -> str:
        """Canonical text, u-exponent descending: `u^2 - 1`, `1/2*u - 1/2`."""
        if not self._terms:
            return "0"
        pieces = []
        for exp in sorted(self._terms, reverse=True):
            coeff = self._terms[exp]
            if exp == 0:
                piece = str(coeff)
            else:
                mono = U_SYMBOL if exp == 1 else f"{U_SYMBOL}^{exp}"
                if coeff == 1:
                    piece = mono
                elif coeff == -1:
                    piece = "-" + mono
                else:
                    piece = f"{coeff}*{mono}"
            pieces.append(piece)
        return _join_signed(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"LaurentU({self.render()!r})"


def render_coefficient(coeff: LaurentU) -> str:
    """A coefficient ready to multiply a monomial: `3`, `-u`, `(u + 1)`, `-(u - 1)`."""
    if coeff.is_monomial():
        return coeff.render()
    if coeff.leading_negative():
        return f"-({(-coeff).render()})"
    return f"({coeff.render()})"


def _join_signed(pieces: List[str]) -> str:
    text = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            text += " - " + piece[1:]
        else:
            text += " + " + piece
    return text


ZERO = LaurentU()
ONE = LaurentU.constant(1)
U = LaurentU.u_power(1)
U_INV = LaurentU.u_power(-1)


def laurent_arith(a: LaurentU, b: LaurentU, op: str) -> LaurentU:
    """
    Apply a ring operation to two Laurent polynomials.

    Args:
        a: Left operand
        b: Right operand (ignored by `neg`)
        op: One of 'add', 'sub', 'mul', 'neg'

    Returns:
        The canonical result
    """
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    if op == 'neg':
        return -a
    raise ParameterError(f"Unknown Laurent operation: {op}")


class TracePoly:
    """
    A sparse polynomial in z and x_1..x_{d-1} with LaurentU coefficients.

    x_0 is the scalar 1, so index 0 never appears in a stored monomial.
    """

    __slots__ = ('d', '_terms', '_hash')

    def __init__(self, d: int, terms: Optional[Mapping[MonomialKey, Scalar]] = None):
        if d < 1:
            raise ParameterError(f"Modulus must be >= 1, got {d}")
        self.d = d
        clean: Dict[MonomialKey, LaurentU] = {}
        if terms:
            for key, coeff in terms.items():
                key = _normalize_key(d, key)
                coeff = LaurentU.coerce(coeff)
                total = clean.get(key, ZERO) + coeff
                if total:
                    clean[key] = total
                else:
                    clean.pop(key, None)
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, d: int, clean: Dict[MonomialKey, LaurentU]) -> "TracePoly":
        obj = cls.__new__(cls)
        obj.d = d
        obj._terms = clean
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, d: int) -> "TracePoly":
        return cls(d)

    @classmethod
    def constant(cls, d: int, value: Scalar = 1) -> "TracePoly":
        return cls(d, {(0, ()): value})

    @classmethod
    def monomial(cls, d: int, z_exp: int = 0,
                 x_exps: Optional[Mapping[int, int]] = None,
                 coeff: Scalar = 1) -> "TracePoly":
        key = (z_exp, tuple(sorted((x_exps or {}).items())))
        return cls(d, {key: coeff})

    @property
    def terms(self) -> Dict[MonomialKey, LaurentU]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[MonomialKey, LaurentU]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, TracePoly):
            return NotImplemented
        return self.d == other.d and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.d, frozenset(self._terms.items())))
        return self._hash

    def _check(self, other: "TracePoly"):
        if self.d != other.d:
            raise IncompatibleError(
                f"Trace polynomials at incompatible levels: d={self.d} vs d={other.d}")

    def __add__(self, other):
        if not isinstance(other, TracePoly):
            if isinstance(other, (int, Fraction, LaurentU)):
                return self + TracePoly.constant(self.d, other)
            return NotImplemented
        self._check(other)
        result = dict(self._terms)
        for key, coeff in other._terms.items():
            total = result.get(key, ZERO) + coeff
            if total:
                result[key] = total
            else:
                result.pop(key, None)
        return TracePoly._wrap(self.d, result)

    __radd__ = __add__

    def __neg__(self):
        return TracePoly._wrap(self.d, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, LaurentU)):
            other = TracePoly.constant(self.d, other)
        if not isinstance(other, TracePoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, factor: Scalar) -> "TracePoly":
        factor = LaurentU.coerce(factor)
        if not factor:
            return TracePoly.zero(self.d)
        result = {}
        for key, coeff in self._terms.items():
            value = coeff * factor
            if value:
                result[key] = value
        return TracePoly._wrap(self.d, result)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentU)):
            return self.scale(other)
        if not isinstance(other, TracePoly):
            return NotImplemented
        self._check(other)
        result: Dict[MonomialKey, LaurentU] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = _multiply_keys(k1, k2)
                total = result.get(key, ZERO) + c1 * c2
                if total:
                    result[key] = total
                else:
                    result.pop(key, None)
        return TracePoly._wrap(self.d, result)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, LaurentU)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ParameterError("Trace polynomials only take non-negative integer powers")
        result = TracePoly.constant(self.d)
        for _ in range(exponent):
            result = result * self
        return result

    def map_x(self, target_d: int, index_map) -> "TracePoly":
        """
        Substitute every x_i by the polynomial `index_map(i)` at modulus target_d.
        z and u are untouched; equal monomials merge.
        """
        result = TracePoly.zero(target_d)
        for (z_exp, xkey), coeff in self._terms.items():
            term = TracePoly.monomial(target_d, z_exp, coeff=coeff)
            for index, exp in xkey:
                term = term * (index_map(index) ** exp)
            result = result + term
        return result

    def render(self) -> str:
        """
        Canonical text: z-exponent descending, then x-monomials in lexicographic
        order of their (index, exponent) keys, coefficients u-descending.
        """
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda k: (-k[0], k[1]))
        pieces = []
        for key in keys:
            coeff = self._terms[key]
            mono = _render_monomial(key)
            if not mono:
                pieces.append(coeff.render() if len(keys) == 1 else render_coefficient(coeff))
            elif coeff == 1:
                pieces.append(mono)
            elif coeff == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{render_coefficient(coeff)}*{mono}")
        return _join_signed(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"TracePoly(d={self.d}, {self.render()!r})"


def _normalize_key(d: int, key) -> MonomialKey:
    z_exp, xkey = key
    if z_exp < 0:
        raise ParameterError("z-exponents must be non-negative")
    if isinstance(xkey, Mapping):
        xkey = xkey.items()
    merged: Dict[int, int] = {}
    for index, exp in xkey:
        if not 1 <= index <= d - 1:
            raise ParameterError(f"x-index {index} outside 1..{d - 1}")
        if exp < 0:
            raise ParameterError("x-exponents must be non-negative")
        if exp:
            merged[index] = merged.get(index, 0) + exp
    return (z_exp, tuple(sorted(merged.items())))


def _multiply_keys(k1: MonomialKey, k2: MonomialKey) -> MonomialKey:
    if not k2[1]:
        return (k1[0] + k2[0], k1[1])
    if not k1[1]:
        return (k1[0] + k2[0], k2[1])
    merged = dict(k1[1])
    for index, exp in k2[1]:
        merged[index] = merged.get(index, 0) + exp
    return (k1[0] + k2[0], tuple(sorted(merged.items())))


def _render_monomial(key: MonomialKey) -> str:
    z_exp, xkey = key
    parts = []
    if z_exp:
        parts.append(Z_SYMBOL if z_exp == 1 else f"{Z_SYMBOL}^{z_exp}")
    for index, exp in xkey:
        var = f"{X_PREFIX}{index}"
        parts.append(var if exp == 1 else f"{var}^{exp}")
    return "*".join(parts)


def tracepoly_arith(a: TracePoly, b: Union[TracePoly, LaurentU], op: str) -> TracePoly:
    """
    Apply a ring operation to trace polynomials.

    Args:
        a: Left operand
        b: Right operand; a LaurentU for 'scale'
        op: One of 'add', 'sub', 'mul', 'scale'

    Returns:
        The canonical result

    Raises:
        IncompatibleError: if the moduli differ
    """
    if op == 'scale':
        return a.scale(b)
    if not isinstance(b, TracePoly):
        raise ParameterError(f"Operation {op} needs two trace polynomials")
    if op == 'add':
        return a + b
    if op == 'sub':
        return a - b
    if op == 'mul':
        return a * b
    raise ParameterError(f"Unknown trace polynomial operation: {op}")


def x_var(d: int, m: int) -> TracePoly:
    """
    The indeterminate x_{m mod d}; x_0 is the constant 1.

    Negative indices such as x_{-m} are reduced into 0..d-1 first.
    """
    if d < 1:
        raise ParameterError(f"Modulus must be >= 1, got {d}")
    index = m % d
    if index == 0:
        return TracePoly.constant(d)
    return TracePoly._wrap(d, {(0, ((index, 1),)): ONE})


def z_var(d: int) -> TracePoly:
    return TracePoly._wrap(d, {(1, ()): ONE})


# ============== PARSING ==============
_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<x>x_\d+)|(?P<name>[uz])|(?P<op>[-+*/^()])|(?P<bad>\S))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    text = text.replace('·', '*').replace('−', '-')
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            break
        if match.end() == pos:
            break
        kind = match.lastgroup
        value = match.group(kind)
        column = match.start(kind) + 1
        if kind == 'bad':
            raise ParseError(f"Unexpected character {value!r}", column, text)
        tokens.append((kind, value, column))
        pos = match.end()
    tokens.append(('end', '', len(text) + 1))
    return tokens


class _PolyParser:
    """Recursive-descent parser for sums, products and powers of u, z, x_i."""

    def __init__(self, text: str, d: int):
        self.text = text
        self.d = d
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, value: str):
        kind, got, column = self.take()
        if got != value:
            raise ParseError(f"Expected {value!r}", column, self.text)

    def parse(self) -> TracePoly:
        value = self.expr()
        kind, got, column = self.peek()
        if kind != 'end':
            raise ParseError(f"Unexpected {got!r}", column, self.text)
        return value

    def expr(self) -> TracePoly:
        sign = 1
        if self.peek()[1] in ('+', '-'):
            sign = -1 if self.take()[1] == '-' else 1
        value = self.term().scale(sign)
        while self.peek()[1] in ('+', '-'):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == '+' else value - rhs
        return value

    def term(self) -> TracePoly:
        value = self.power()
        while self.peek()[1] in ('*', '/'):
            op = self.take()[1]
            column = self.peek()[2]
            rhs = self.power()
            if op == '*':
                value = value * rhs
            else:
                value = value * _invert_scalar(rhs, column, self.text)
        return value

    def power(self) -> TracePoly:
        base = self.atom()
        if self.peek()[1] != '^':
            return base
        self.take()
        negative = False
        if self.peek()[1] == '-':
            self.take()
            negative = True
        kind, digits, column = self.take()
        if kind != 'num':
            raise ParseError("Expected an integer exponent", column, self.text)
        exponent = int(digits)
        if negative:
            return _invert_scalar(base, column, self.text) ** exponent
        return base ** exponent

    def atom(self) -> TracePoly:
        kind, value, column = self.take()
        if kind == 'num':
            return TracePoly.constant(self.d, int(value))
        if kind == 'x':
            return x_var(self.d, int(value[len(X_PREFIX):]))
        if kind == 'name':
            if value == U_SYMBOL:
                return TracePoly.constant(self.d, U)
            return z_var(self.d)
        if value == '(':
            inner = self.expr()
            self.expect(')')
            return inner
        raise ParseError(f"Unexpected {value or 'end of input'!r}", column, self.text)


def _invert_scalar(value: TracePoly, column: int, text: str) -> TracePoly:
    """Invert a single-term constant c*u^k; anything else is not invertible here."""
    terms = value.terms
    if len(terms) != 1 or (0, ()) not in terms or not terms[(0, ())].is_monomial():
        raise ParseError("Only monomials c*u^k can be inverted", column, text)
    ((exp, coeff),) = terms[(0, ())].items()
    return TracePoly.constant(value.d, LaurentU.u_power(-exp, 1 / coeff))


def parse_tracepoly(text: str, d: int) -> TracePoly:
    """
    Parse a trace polynomial (the canonical rendering or any equivalent expression).

    Args:
        text: Expression over rationals, u, z and x_i
        d: Modulus of the target ring

    Returns:
        TracePoly at modulus d

    Raises:
        ParseError: with the 1-based column of the offending token
    """
    if not text.strip():
        raise ParseError("Empty polynomial", 1, text)
    return _PolyParser(text, d).parse()


def parse_laurent(text: str) -> LaurentU:
    """Parse a Laurent polynomial in u."""
    poly = parse_tracepoly(text, 1)
    terms = poly.terms
    if any(key != (0, ()) for key in terms):
        raise ParseError("Laurent polynomials may only mention u", 1, text)
    return terms.get((0, ()), ZERO)


if __name__ == "__main__":
    a = LaurentU({1: 1, 0: -1})
    b = LaurentU({1: 1, 0: 1})
    print(f"({a}) * ({b}) = {a * b}")
    e = (x_var(2, 0) + x_var(2, 1) * x_var(2, -1)).scale(Fraction(1, 2))
    print(f"tr(e_2) = {e}")
    print(f"parsed back: {parse_tracepoly(e.render(), 2) == e}")
