"""
Truncated p-adic integers.
A value is a coherent residue sequence a_1, a_2, ..., a_R with a_r in Z/p^r,
stored as base-p digits so that coherence holds by construction.
"""

import re
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .errors import IncompatibleError, ParameterError, ParseError, PrecisionError
from ..config.config import is_prime
from ..utils.logger import get_logger

logger = get_logger('padic')


@dataclass(frozen=True)
class PadicApprox:
    """A p-adic integer known to precision R = len(digits)."""
    p: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ParameterError(f"p must be prime, got {self.p}")
        if len(self.digits) < 1:
            raise ParameterError("Precision must be >= 1")
        for digit in self.digits:
            if not 0 <= digit < self.p:
                raise ParameterError(f"Digit {digit} outside 0..{self.p - 1}")

    @property
    def precision(self) -> int:
        return len(self.digits)

    def residues(self) -> List[int]:
        """All levels a_1..a_R."""
        out = []
        value = 0
        power = 1
        for digit in self.digits:
            value += digit * power
            power *= self.p
            out.append(value)
        return out

    def __add__(self, other):
        if not isinstance(other, PadicApprox):
            return NotImplemented
        return padic_add(self, other)

    def __neg__(self):
        return padic_neg(self)

    def __sub__(self, other):
        if not isinstance(other, PadicApprox):
            return NotImplemented
        return padic_sub(self, other)

    def __str__(self):
        return format_padic(self)


def _check_params(p: int, R: int):
    if p < 2 or not is_prime(p):
        raise ParameterError(f"p must be a prime >= 2, got {p}")
    if R < 1:
        raise ParameterError(f"Precision R must be >= 1, got {R}")


def _digits_of(value: int, p: int, R: int) -> Tuple[int, ...]:
    value %= p ** R
    digits = []
    for _ in range(R):
        value, digit = divmod(value, p)
        digits.append(digit)
    return tuple(digits)


def padic_from_int(k: int, p: int, R: int) -> PadicApprox:
    """
    Embed an integer as the constant sequence (k mod p, k mod p^2, ...).

    Args:
        k: Any integer (negative values reduce modulo p^r at every level)
        p: Prime
        R: Precision

    Returns:
        PadicApprox of precision R
    """
    _check_params(p, R)
    return PadicApprox(p, _digits_of(k, p, R))


def padic_from_residues(p: int, residues: Sequence[int]) -> PadicApprox:
    """
    Build a value from its residue sequence, rejecting incoherent sequences.

    Raises:
        ParameterError: if a_r is out of range or a_r != a_s (mod p^s) for r > s
    """
    _check_params(p, len(residues))
    for level, value in enumerate(residues, start=1):
        if not 0 <= value < p ** level:
            raise ParameterError(f"Residue {value} at level {level} outside 0..{p ** level - 1}")
        if level > 1 and value % p ** (level - 1) != residues[level - 2]:
            raise ParameterError(f"Residues are not coherent at level {level}")
    return PadicApprox(p, _digits_of(residues[-1], p, len(residues)))


def residue(a: PadicApprox, r: int) -> int:
    """The level-r residue a_r = sum_{i<r} d_i p^i, in [0, p^r)."""
    if not 1 <= r <= a.precision:
        raise PrecisionError(f"Level {r} outside 1..{a.precision}")
    value = 0
    for digit in reversed(a.digits[:r]):
        value = value * a.p + digit
    return value


def theta(a: PadicApprox, s: int) -> PadicApprox:
    """Connecting map to level s: cut out the digits beyond s."""
    if not 1 <= s <= a.precision:
        raise PrecisionError(f"Level {s} outside 1..{a.precision}")
    if s == a.precision:
        return a
    return PadicApprox(a.p, a.digits[:s])


def _common(a: PadicApprox, b: PadicApprox) -> int:
    if a.p != b.p:
        raise IncompatibleError(f"Prime mismatch: {a.p} vs {b.p}")
    return min(a.precision, b.precision)


def padic_add(a: PadicApprox, b: PadicApprox) -> PadicApprox:
    """Levelwise sum; the result has the smaller of the two precisions."""
    R = _common(a, b)
    return PadicApprox(a.p, _digits_of(residue(a, R) + residue(b, R), a.p, R))


def padic_neg(a: PadicApprox) -> PadicApprox:
    R = a.precision
    return PadicApprox(a.p, _digits_of(-residue(a, R), a.p, R))


def padic_sub(a: PadicApprox, b: PadicApprox) -> PadicApprox:
    return padic_add(a, padic_neg(b))


def approx_sequence(a: PadicApprox) -> List[Tuple[int, PadicApprox]]:
    """
    The approximating constant sequences: the k-th element embeds residue(a, k)
    as a constant, so it agrees with a at every level <= k.
    """
    return [
        (k, padic_from_int(residue(a, k), a.p, a.precision))
        for k in range(1, a.precision + 1)
    ]


# ============== TEXT FORMAT ==============
_PADIC_RE = re.compile(r"^\s*(\d+)\^(\d+):([\d,\s]+)$")


def format_padic(a: PadicApprox) -> str:
    """`p^R:d0,d1,...` e.g. `3^3:1,1,1`."""
    return f"{a.p}^{a.precision}:" + ",".join(str(d) for d in a.digits)


def parse_padic(text: str) -> PadicApprox:
    """
    Parse the `p^R:d0,d1,...` format.

    Raises:
        ParseError: on malformed text or a digit count different from R
        ParameterError: on a non-prime p or out-of-range digit
    """
    match = _PADIC_RE.match(text)
    if match is None:
        raise ParseError(f"Malformed p-adic value {text!r}, expected p^R:d0,d1,...", 1, text)
    p, R = int(match.group(1)), int(match.group(2))
    parts = [part.strip() for part in match.group(3).split(",")]
    if any(not part for part in parts):
        raise ParseError("Empty digit in p-adic value", match.start(3) + 1, text)
    digits = tuple(int(part) for part in parts)
    if len(digits) != R:
        raise ParseError(f"Expected {R} digits, got {len(digits)}", match.start(3) + 1, text)
    _check_params(p, R)
    return PadicApprox(p, digits)


if __name__ == "__main__":
    b = padic_from_int(1 + 3 + 9, 3, 3)
    print(f"b = {b}, residues {b.residues()}")
    print(f"b + b residues: {(b + b).residues()}")
    for level, approx in approx_sequence(b):
        print(f"  approximant {level}: {approx}")
