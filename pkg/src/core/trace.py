"""
Markov traces.

markov_trace: the linear Markov trace on Y_{d,n}(u) with values in the
trace polynomials C[z, x_1..x_{d-1}], computed by stripping the top strand.

The p-adic side realizes Y_{inf,n}(u) as truncated towers (one coherent
element per level d = p^r, r = 1..R) and the p-adic trace as the family of
level traces, coherent under delta_map.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Tuple, Union

from .coeff import Scalar, TracePoly, x_var, z_var
from .errors import IncompatibleError, ParameterError, PrecisionError
from .framed_braids import FramedBraidWord, word_at_level
from .padic import PadicApprox, residue
from .symmetric import InSubgroup, coset_decompose, perm_from_word, staircase
from .yokonuma import (
    YBasisElt, YElement, YParams, basis_product, framing_average, phi_map,
    y_e, y_eval_word, y_g, y_g_inverse, y_mul, y_one, y_t,
)
from ..config.config import BASIS_TRACE_CACHE_SIZE, is_prime, prime_power_exponent
from ..utils.logger import get_logger

logger = get_logger('trace')


# ============== CLASSICAL TRACE ==============
@lru_cache(maxsize=BASIS_TRACE_CACHE_SIZE)
def _basis_trace(d: int, basis_elt: YBasisElt) -> TracePoly:
    framing = basis_elt.framing
    n = len(framing)
    if n == 1:
        return x_var(d, framing[0])
    decomposition = coset_decompose(basis_elt.perm)
    if isinstance(decomposition, InSubgroup):
        rest = YBasisElt(framing[:-1], decomposition.perm)
        return x_var(d, framing[-1]) * _basis_trace(d, rest)
    # t^a g_v g_{n-1} g_{n-2}...g_k = A g_{n-1} B with A, B on the first n-1 strands
    head = YBasisElt(framing[:-1], decomposition.v)
    tail_framing = (0,) * (n - 2) + (framing[-1],)
    tail = YBasisElt(tail_framing, perm_from_word(n - 1, staircase(n - 1, decomposition.k)))
    total = TracePoly.zero(d)
    for term, coeff in basis_product(d, head, tail):
        total = total + _basis_trace(d, term).scale(coeff)
    return z_var(d) * total


def basis_trace(params: YParams, basis_elt: YBasisElt) -> TracePoly:
    return _basis_trace(params.d, basis_elt)


def markov_trace(x: YElement) -> TracePoly:
    """
    The Markov trace: tr(1) = 1, tr(a g_{n-1} b) = z tr(ab), tr(a t_n^m b) = x_m tr(ab).

    Args:
        x: Element of Y_{d,n}(u)

    Returns:
        TracePoly at modulus d
    """
    d = x.params.d
    total = TracePoly.zero(d)
    for basis_elt, coeff in x.items():
        total = total + _basis_trace(d, basis_elt).scale(coeff)
    return total


def trace_cache_info():
    return _basis_trace.cache_info()


def average_trace_formula(d: int, count: int) -> TracePoly:
    """(1/count) sum_{m < count} x_m x_{-m} at modulus d."""
    total = TracePoly.zero(d)
    for m in range(count):
        total = total + x_var(d, m) * x_var(d, -m)
    return total.scale(Fraction(1, count))


def e_trace_formula(d: int) -> TracePoly:
    """Closed form of tr(e_{d,i}): (1/d) sum_{m < d} x_m x_{-m}."""
    return average_trace_formula(d, d)


def delta_map(q: TracePoly, p: int, s: int) -> TracePoly:
    """
    The connecting epimorphism C[z, X_r] -> C[z, X_s]: x_i -> x_{i mod p^s}, x_0 = 1.

    Raises:
        IncompatibleError: if the modulus is not a power of p
        PrecisionError: if s > r
    """
    r = prime_power_exponent(q.d, p)
    if r is None:
        raise IncompatibleError(f"Modulus {q.d} is not a power of {p}")
    if not 0 <= s <= r:
        raise PrecisionError(f"Level {s} outside 0..{r}")
    if s == r:
        return q
    target = p ** s
    return q.map_x(target, lambda index: x_var(target, index))


# ============== TOWERS ==============
def _check_prime(p: int):
    if not is_prime(p):
        raise ParameterError(f"p must be prime, got {p}")


def _level_params(p: int, R: int, n: int) -> List[YParams]:
    if R < 1:
        raise ParameterError(f"Depth R must be >= 1, got {R}")
    _check_prime(p)
    return [YParams(p ** r, n) for r in range(1, R + 1)]


@dataclass(frozen=True)
class TowerElement:
    """Coherent family (x_1, ..., x_R) with x_r in Y_{p^r,n}(u)."""
    p: int
    R: int
    n: int
    levels: Tuple[YElement, ...]

    def __post_init__(self):
        if len(self.levels) != self.R:
            raise ParameterError(f"Tower of depth {self.R} needs {self.R} levels")
        for r, level in enumerate(self.levels, start=1):
            if level.params != YParams(self.p ** r, self.n):
                raise IncompatibleError(f"Level {r} lives in {level.params}")

    def level(self, r: int) -> YElement:
        return tower_project(self, r)

    def __mul__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        return tower_mul(self, other)

    def __add__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        return tower_add(self, other)

    def __sub__(self, other):
        if not isinstance(other, TowerElement):
            return NotImplemented
        return tower_sub(self, other)


def _tower(p: int, R: int, n: int, build: Callable[[YParams], YElement]) -> TowerElement:
    return TowerElement(p, R, n, tuple(build(params) for params in _level_params(p, R, n)))


def _check_towers(x: TowerElement, y: TowerElement):
    if (x.p, x.R, x.n) != (y.p, y.R, y.n):
        raise IncompatibleError(
            f"Towers differ: (p={x.p}, R={x.R}, n={x.n}) vs (p={y.p}, R={y.R}, n={y.n})")


def tower_one(p: int, R: int, n: int) -> TowerElement:
    return _tower(p, R, n, y_one)


def tower_g(p: int, R: int, n: int, i: int) -> TowerElement:
    return _tower(p, R, n, lambda params: y_g(params, i))


def tower_g_inverse(p: int, R: int, n: int, i: int) -> TowerElement:
    return _tower(p, R, n, lambda params: y_g_inverse(params, i))


def tower_e(p: int, R: int, n: int, i: int) -> TowerElement:
    """e_i = (e_{p,i}, e_{p^2,i}, ...)."""
    return _tower(p, R, n, lambda params: y_e(params, i, i + 1))


def tower_t(p: int, R: int, n: int, i: int, exponent: Union[int, PadicApprox] = 1) -> TowerElement:
    """t_i raised to an integer or p-adic exponent; level r uses the level-r residue."""
    if isinstance(exponent, PadicApprox):
        if exponent.p != p:
            raise IncompatibleError(f"Exponent prime {exponent.p} differs from {p}")
        if exponent.precision < R:
            raise PrecisionError(f"Exponent precision {exponent.precision} below depth {R}")
        return _tower(p, R, n, lambda params: y_t(params, i, residue(exponent, _level_of(params, p))))
    return _tower(p, R, n, lambda params: y_t(params, i, exponent))


def _level_of(params: YParams, p: int) -> int:
    return prime_power_exponent(params.d, p)


def tower_from_word(w: FramedBraidWord, p: int, R: int) -> TowerElement:
    """
    Evaluate a word at every level; level r reduces p-adic framings to their level-r residue.

    Raises:
        PrecisionError: if a p-adic framing has precision below R
    """
    levels = []
    for params in _level_params(p, R, w.n):
        r = _level_of(params, p)
        levels.append(y_eval_word(word_at_level(w, p, r), params))
    return TowerElement(p, R, w.n, tuple(levels))


def tower_mul(x: TowerElement, y: TowerElement) -> TowerElement:
    _check_towers(x, y)
    return TowerElement(x.p, x.R, x.n, tuple(y_mul(a, b) for a, b in zip(x.levels, y.levels)))


def tower_add(x: TowerElement, y: TowerElement) -> TowerElement:
    _check_towers(x, y)
    return TowerElement(x.p, x.R, x.n, tuple(a + b for a, b in zip(x.levels, y.levels)))


def tower_sub(x: TowerElement, y: TowerElement) -> TowerElement:
    _check_towers(x, y)
    return TowerElement(x.p, x.R, x.n, tuple(a - b for a, b in zip(x.levels, y.levels)))


def tower_scale(x: TowerElement, factor: Scalar) -> TowerElement:
    return TowerElement(x.p, x.R, x.n, tuple(level.scale(factor) for level in x.levels))


def tower_project(x: TowerElement, s: int) -> YElement:
    """The level-s component."""
    if not 1 <= s <= x.R:
        raise PrecisionError(f"Level {s} outside 1..{x.R}")
    return x.levels[s - 1]


def is_coherent(x: TowerElement) -> bool:
    """phi maps every level onto the one below (adjacent levels suffice)."""
    return all(
        phi_map(x.levels[r - 1], x.p, r - 1) == x.levels[r - 2]
        for r in range(2, x.R + 1)
    )


def z_approx(params: YParams, p: int, k: int, i: int) -> YElement:
    """
    z_{r,k,i} = (1/p^k) sum_{m < p^k} t_i^m t_{i+1}^{-m} in Y_{p^r,n}; equals e_{p^r,i} at k = r.

    Raises:
        PrecisionError: if k > r
    """
    r = prime_power_exponent(params.d, p)
    if r is None:
        raise IncompatibleError(f"Modulus {params.d} is not a power of {p}")
    if not 0 <= k <= r:
        raise PrecisionError(f"Level {k} outside 0..{r}")
    if not 1 <= i <= params.n - 1:
        raise ParameterError(f"Index {i} outside 1..{params.n - 1}")
    return framing_average(params, i, i + 1, p ** k)


# ============== P-ADIC TRACE ==============
@dataclass(frozen=True)
class PadicTraceValue:
    """Coherent family of trace polynomials, level r at modulus p^r."""
    p: int
    R: int
    levels: Tuple[TracePoly, ...]

    def __post_init__(self):
        if len(self.levels) != self.R:
            raise ParameterError(f"Trace value of depth {self.R} needs {self.R} levels")
        for r, level in enumerate(self.levels, start=1):
            if level.d != self.p ** r:
                raise IncompatibleError(f"Level {r} has modulus {level.d}, expected {self.p ** r}")

    def __mul__(self, other):
        if not isinstance(other, PadicTraceValue):
            return NotImplemented
        _check_values(self, other)
        return PadicTraceValue(self.p, self.R, tuple(a * b for a, b in zip(self.levels, other.levels)))

    def __add__(self, other):
        if not isinstance(other, PadicTraceValue):
            return NotImplemented
        _check_values(self, other)
        return PadicTraceValue(self.p, self.R, tuple(a + b for a, b in zip(self.levels, other.levels)))

    def level(self, r: int) -> TracePoly:
        if not 1 <= r <= self.R:
            raise PrecisionError(f"Level {r} outside 1..{self.R}")
        return self.levels[r - 1]

    def is_coherent(self) -> bool:
        return all(
            delta_map(self.levels[r - 1], self.p, r - 1) == self.levels[r - 2]
            for r in range(2, self.R + 1)
        )

    def render(self) -> List[str]:
        return [level.render() for level in self.levels]


def _check_values(a: PadicTraceValue, b: PadicTraceValue):
    if (a.p, a.R) != (b.p, b.R):
        raise IncompatibleError(f"Trace values differ: (p={a.p}, R={a.R}) vs (p={b.p}, R={b.R})")


def padic_trace(x: TowerElement) -> PadicTraceValue:
    """tau = (tau_1, ..., tau_R), the level traces of a tower."""
    levels = tuple(markov_trace(level) for level in x.levels)
    value = PadicTraceValue(x.p, x.R, levels)
    logger.debug(f"p-adic trace at p={x.p}, R={x.R}: {value.render()}")
    return value


def padic_x(a: PadicApprox, R: Optional[int] = None) -> PadicTraceValue:
    """The p-adic indeterminate x_a = (x_{a_1}, x_{a_2}, ...)."""
    R = a.precision if R is None else R
    if not 1 <= R <= a.precision:
        raise PrecisionError(f"Depth {R} outside 1..{a.precision}")
    levels = tuple(x_var(a.p ** r, residue(a, r)) for r in range(1, R + 1))
    return PadicTraceValue(a.p, R, levels)


def padic_z(p: int, R: int) -> PadicTraceValue:
    _check_prime(p)
    return PadicTraceValue(p, R, tuple(z_var(p ** r) for r in range(1, R + 1)))


def approximant_traces(w: FramedBraidWord, p: int, R: int) -> List[Tuple[int, PadicTraceValue]]:
    """
    Traces of the approximating words: the k-th one replaces every p-adic
    exponent by its level-k residue, and agrees with the p-adic trace of w on
    levels <= k.
    """
    out = []
    for k in range(1, R + 1):
        approximant = word_at_level(w, p, k)
        out.append((k, padic_trace(tower_from_word(approximant, p, R))))
    return out


def trace_values_agree(a: PadicTraceValue, b: PadicTraceValue, upto: int) -> bool:
    _check_values(a, b)
    return all(a.level(r) == b.level(r) for r in range(1, upto + 1))


if __name__ == "__main__":
    params = YParams(2, 2)
    g = y_g(params, 1)
    print(f"tr(g1) = {markov_trace(g)}")
    print(f"tr(g1^2) = {markov_trace(g * g)}")
    print(f"tr(e1) = {markov_trace(y_e(params, 1, 2))}")
    from .padic import padic_from_int
    b = padic_from_int(1 + 3 + 9, 3, 3)
    print(f"tau(t^b) = {padic_trace(tower_t(3, 3, 1, 1, b)).render()}")
