"""
Framed braid words and their split forms.
Covers the classical group F_n = Z^n x| B_n, the modular groups F_{d,n}
(framings mod d) and truncated p-adic framed braids (framings in Z_p).

Convention: a braid acts on framing vectors by transport along its
permutation image w, (w . a)_{w(j)} = a_j, so that sigma . f^b = f^{w . b} . sigma.
"""

import re
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .errors import IncompatibleError, ParameterError, ParseError, PrecisionError
from .padic import (
    PadicApprox, padic_add, padic_from_int, padic_neg, parse_padic, format_padic,
    residue, theta,
)
from .symmetric import Perm, perm_identity, perm_inverse, swap_right
from ..config.config import prime_power_exponent
from ..utils.logger import get_logger

logger = get_logger('framed_braids')

Exponent = Union[int, PadicApprox]


@dataclass(frozen=True)
class FramingLetter:
    """f_i^e; the exponent may be a truncated p-adic integer."""
    index: int
    exponent: Exponent = 1


@dataclass(frozen=True)
class BraidLetter:
    """sigma_i^{sign}."""
    index: int
    sign: int = 1

    def inverse(self) -> "BraidLetter":
        return BraidLetter(self.index, -self.sign)


Letter = Union[FramingLetter, BraidLetter]


@dataclass(frozen=True)
class FramedBraidWord:
    """A word in the framing generators f_1..f_n and braid generators sigma_1..sigma_{n-1}."""
    n: int
    letters: Tuple[Letter, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError(f"Strand count must be >= 1, got {self.n}")
        for letter in self.letters:
            if isinstance(letter, FramingLetter):
                if not 1 <= letter.index <= self.n:
                    raise ParameterError(f"Framing generator f{letter.index} outside 1..{self.n}")
            elif isinstance(letter, BraidLetter):
                if not 1 <= letter.index <= self.n - 1:
                    raise ParameterError(f"Braid generator s{letter.index} outside 1..{self.n - 1}")
                if letter.sign not in (1, -1):
                    raise ParameterError(f"Braid letter sign must be +1 or -1, got {letter.sign}")
            else:
                raise ParameterError(f"Unknown letter {letter!r}")

    def __mul__(self, other: "FramedBraidWord") -> "FramedBraidWord":
        if self.n != other.n:
            raise IncompatibleError(f"Strand mismatch: {self.n} vs {other.n}")
        return FramedBraidWord(self.n, self.letters + other.letters)

    def inverse(self) -> "FramedBraidWord":
        letters = []
        for letter in reversed(self.letters):
            if isinstance(letter, BraidLetter):
                letters.append(letter.inverse())
            elif isinstance(letter.exponent, PadicApprox):
                letters.append(FramingLetter(letter.index, padic_neg(letter.exponent)))
            else:
                letters.append(FramingLetter(letter.index, -letter.exponent))
        return FramedBraidWord(self.n, tuple(letters))

    def has_padic_framings(self) -> bool:
        return any(
            isinstance(letter, FramingLetter) and isinstance(letter.exponent, PadicApprox)
            for letter in self.letters
        )

    def __str__(self):
        return format_word(self)


@dataclass(frozen=True)
class SplitFramedBraid:
    """
    Canonical split t^a . beta: framing vector plus freely reduced braid word.
    `modulus` is None for the classical group and d for F_{d,n}.
    """
    n: int
    framing: Tuple[int, ...]
    braid: Tuple[BraidLetter, ...] = ()
    modulus: Optional[int] = None

    def __post_init__(self):
        if len(self.framing) != self.n:
            raise ParameterError(f"Framing vector has length {len(self.framing)}, expected {self.n}")
        if self.modulus is not None:
            if self.modulus < 1:
                raise ParameterError(f"Modulus must be >= 1, got {self.modulus}")
            if any(not 0 <= a < self.modulus for a in self.framing):
                raise ParameterError(f"Framings must be residues mod {self.modulus}")

    @property
    def perm(self) -> Perm:
        return braid_permutation(self.braid, self.n)

    def __mul__(self, other: "SplitFramedBraid") -> "SplitFramedBraid":
        return multiply_split(self, other)


@dataclass(frozen=True)
class PadicFramedBraid:
    """A braid with framings in Z_p, all at the same prime and precision."""
    n: int
    framings: Tuple[PadicApprox, ...]
    braid: Tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if len(self.framings) != self.n:
            raise ParameterError(f"Framing vector has length {len(self.framings)}, expected {self.n}")
        primes = {f.p for f in self.framings}
        precisions = {f.precision for f in self.framings}
        if len(primes) > 1 or len(precisions) > 1:
            raise IncompatibleError("p-adic framings must share p and precision")

    @property
    def p(self) -> int:
        return self.framings[0].p

    @property
    def precision(self) -> int:
        return self.framings[0].precision

    @property
    def perm(self) -> Perm:
        return braid_permutation(self.braid, self.n)


# ============== PERMUTATION IMAGE & TRANSPORT ==============
def braid_permutation(letters: Sequence[BraidLetter], n: int) -> Perm:
    """The projection B_n -> S_n: sigma_i^{+-1} maps to s_i."""
    w = perm_identity(n)
    for letter in letters:
        w = swap_right(w, letter.index)
    return w


def transport(w: Perm, vector: Sequence) -> list:
    """Move the entry at position j to position w(j)."""
    out = [None] * len(vector)
    for j, value in enumerate(vector):
        out[w.images[j] - 1] = value
    return out


def free_reduce(letters: Sequence[BraidLetter]) -> Tuple[BraidLetter, ...]:
    """Cancel adjacent sigma_i sigma_i^{-1} pairs."""
    stack: List[BraidLetter] = []
    for letter in letters:
        if stack and stack[-1].index == letter.index and stack[-1].sign == -letter.sign:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def _reduce(framing: Sequence[int], modulus: Optional[int]) -> Tuple[int, ...]:
    if modulus is None:
        return tuple(framing)
    return tuple(a % modulus for a in framing)


# ============== CLASSICAL & MODULAR GROUPS ==============
def split_identity(n: int, modulus: Optional[int] = None) -> SplitFramedBraid:
    return SplitFramedBraid(n, (0,) * n, (), modulus)


def split(w: FramedBraidWord, modulus: Optional[int] = None) -> SplitFramedBraid:
    """
    Push every framing letter to the left through the braid letters before it.

    Args:
        w: Word with integer exponents
        modulus: Reduce framings mod d (the group F_{d,n}) when given

    Returns:
        SplitFramedBraid with a freely reduced braid part
    """
    if w.has_padic_framings():
        raise ParameterError("Word has p-adic framings; use padic_split")
    framing = [0] * w.n
    braid: List[BraidLetter] = []
    perm = perm_identity(w.n)
    for letter in w.letters:
        if isinstance(letter, FramingLetter):
            framing[perm.images[letter.index - 1] - 1] += letter.exponent
        else:
            if braid and braid[-1].index == letter.index and braid[-1].sign == -letter.sign:
                braid.pop()
            else:
                braid.append(letter)
            perm = swap_right(perm, letter.index)
    return SplitFramedBraid(w.n, _reduce(framing, modulus), tuple(braid), modulus)


def _check_pair(x: SplitFramedBraid, y: SplitFramedBraid):
    if x.n != y.n:
        raise IncompatibleError(f"Strand mismatch: {x.n} vs {y.n}")
    if x.modulus != y.modulus:
        raise IncompatibleError(f"Modulus mismatch: {x.modulus} vs {y.modulus}")


def multiply_split(x: SplitFramedBraid, y: SplitFramedBraid) -> SplitFramedBraid:
    """(a, alpha)(b, beta) = (a + w_alpha . b, alpha beta)."""
    _check_pair(x, y)
    moved = transport(x.perm, y.framing)
    framing = [a + b for a, b in zip(x.framing, moved)]
    return SplitFramedBraid(
        x.n, _reduce(framing, x.modulus), free_reduce(x.braid + y.braid), x.modulus)


def inverse_split(x: SplitFramedBraid) -> SplitFramedBraid:
    """(a, alpha)^{-1} = (-(w_alpha^{-1} . a), alpha^{-1})."""
    back = transport(perm_inverse(x.perm), x.framing)
    braid = tuple(letter.inverse() for letter in reversed(x.braid))
    return SplitFramedBraid(x.n, _reduce([-a for a in back], x.modulus), braid, x.modulus)


def project_modular(x: SplitFramedBraid, d: int) -> SplitFramedBraid:
    """F_n -> F_{d,n} (or F_{m,n} -> F_{d,n} for d | m): framings mod d."""
    if d < 1:
        raise ParameterError(f"Modulus must be >= 1, got {d}")
    if x.modulus is not None and x.modulus % d != 0:
        raise IncompatibleError(f"Cannot project mod {x.modulus} framings to mod {d}")
    return SplitFramedBraid(x.n, _reduce(x.framing, d), x.braid, d)


def pi_level_map(x: SplitFramedBraid, p: int, s: int) -> SplitFramedBraid:
    """
    The connecting map F_{p^r,n} -> F_{p^s,n}: framings mod p^s, braid unchanged.

    Raises:
        PrecisionError: if s > r
    """
    if x.modulus is None:
        raise IncompatibleError("Level maps act on modular framed braids")
    r = prime_power_exponent(x.modulus, p)
    if r is None:
        raise IncompatibleError(f"Modulus {x.modulus} is not a power of {p}")
    if not 0 <= s <= r:
        raise PrecisionError(f"Level {s} outside 0..{r}")
    return project_modular(x, p ** s)


def elementary_framing_word(i: int, n: int) -> FramedBraidWord:
    """f_i as the conjugate sigma_{i-1}...sigma_1 f_1 sigma_1^{-1}...sigma_{i-1}^{-1}."""
    if not 1 <= i <= n:
        raise ParameterError(f"Framing index {i} outside 1..{n}")
    letters: List[Letter] = [BraidLetter(j, 1) for j in range(i - 1, 0, -1)]
    letters.append(FramingLetter(1, 1))
    letters.extend(BraidLetter(j, -1) for j in range(1, i))
    return FramedBraidWord(n, tuple(letters))


# ============== P-ADIC FRAMED BRAIDS ==============
def _as_padic(exponent: Exponent, p: int, R: int) -> PadicApprox:
    if isinstance(exponent, PadicApprox):
        if exponent.p != p:
            raise IncompatibleError(f"Framing prime {exponent.p} differs from {p}")
        if exponent.precision < R:
            raise PrecisionError(
                f"Framing precision {exponent.precision} below requested depth {R}")
        return theta(exponent, R)
    return padic_from_int(exponent, p, R)


def padic_split(w: FramedBraidWord, p: int, R: int) -> PadicFramedBraid:
    """Split a word whose exponents are integers or p-adic integers into Z_p^n x| B_n."""
    zero = padic_from_int(0, p, R)
    framings = [zero] * w.n
    braid: List[BraidLetter] = []
    perm = perm_identity(w.n)
    for letter in w.letters:
        if isinstance(letter, FramingLetter):
            position = perm.images[letter.index - 1] - 1
            framings[position] = padic_add(framings[position], _as_padic(letter.exponent, p, R))
        else:
            if braid and braid[-1].index == letter.index and braid[-1].sign == -letter.sign:
                braid.pop()
            else:
                braid.append(letter)
            perm = swap_right(perm, letter.index)
    return PadicFramedBraid(w.n, tuple(framings), tuple(braid))


def padic_multiply(x: PadicFramedBraid, y: PadicFramedBraid) -> PadicFramedBraid:
    """Framings added p-adically after transport by x's permutation; braids concatenated."""
    if x.n != y.n:
        raise IncompatibleError(f"Strand mismatch: {x.n} vs {y.n}")
    if x.p != y.p or x.precision != y.precision:
        raise IncompatibleError("p-adic framed braids at different p or precision")
    moved = transport(x.perm, y.framings)
    framings = tuple(padic_add(a, b) for a, b in zip(x.framings, moved))
    return PadicFramedBraid(x.n, framings, free_reduce(x.braid + y.braid))


def padic_project(x: PadicFramedBraid, r: int) -> SplitFramedBraid:
    """The level-r component in F_{p^r,n}."""
    framing = tuple(residue(f, r) for f in x.framings)
    return SplitFramedBraid(x.n, framing, x.braid, x.p ** r)


def padic_approximants(x: PadicFramedBraid, k: int) -> SplitFramedBraid:
    """
    The k-th classical approximant: integer framings residue(framing_i, k).
    It agrees with x after projection to any level <= k.
    """
    if not 1 <= k <= x.precision:
        raise PrecisionError(f"Level {k} outside 1..{x.precision}")
    return SplitFramedBraid(x.n, tuple(residue(f, k) for f in x.framings), x.braid)


def word_at_level(w: FramedBraidWord, p: int, r: int) -> FramedBraidWord:
    """Replace every p-adic exponent by its level-r residue."""
    letters: List[Letter] = []
    for letter in w.letters:
        if isinstance(letter, FramingLetter) and isinstance(letter.exponent, PadicApprox):
            if letter.exponent.p != p:
                raise IncompatibleError(f"Framing prime {letter.exponent.p} differs from {p}")
            if letter.exponent.precision < r:
                raise PrecisionError(
                    f"Framing precision {letter.exponent.precision} below level {r}")
            letters.append(FramingLetter(letter.index, residue(letter.exponent, r)))
        else:
            letters.append(letter)
    return FramedBraidWord(w.n, tuple(letters))


# ============== TEXT FORMAT ==============
_LETTER_RE = re.compile(
    r"\s*(?:f(?P<fi>\d+)(?:\^(?:\{(?P<fp>[^}]*)\}|(?P<fe>-?\d+)))?"
    r"|s(?P<si>\d+)(?:\^(?P<se>-?\d+))?)(?=\s|$)")


def parse_word(text: str, n: int) -> FramedBraidWord:
    """
    Parse whitespace-separated letters `f<i>^<e>`, `f<i>^{p^R:d0,...}`, `s<i>`, `s<i>^-1`.
    `s<i>^k` expands to |k| letters.

    Raises:
        ParseError: with the 1-based column of the bad token
        ParameterError: when an index does not fit n strands
    """
    letters: List[Letter] = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _LETTER_RE.match(text, pos)
        if match is None:
            column = pos + len(text[pos:]) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"Unrecognized token in braid word {text!r}", column, text)
        if match.group('fi') is not None:
            index = int(match.group('fi'))
            if match.group('fp') is not None:
                try:
                    exponent: Exponent = parse_padic(match.group('fp'))
                except ParseError as exc:
                    raise ParseError(str(exc), match.start('fp') + 1, text) from exc
            elif match.group('fe') is not None:
                exponent = int(match.group('fe'))
            else:
                exponent = 1
            letters.append(FramingLetter(index, exponent))
        else:
            index = int(match.group('si'))
            power = int(match.group('se')) if match.group('se') is not None else 1
            if power == 0:
                raise ParseError("Braid exponent 0", match.start('se') + 1, text)
            sign = 1 if power > 0 else -1
            letters.extend(BraidLetter(index, sign) for _ in range(abs(power)))
        pos = match.end()
    return FramedBraidWord(n, tuple(letters))


def format_word(w: FramedBraidWord) -> str:
    tokens = []
    for letter in w.letters:
        if isinstance(letter, BraidLetter):
            tokens.append(f"s{letter.index}" + ("" if letter.sign == 1 else "^-1"))
        elif isinstance(letter.exponent, PadicApprox):
            tokens.append(f"f{letter.index}^{{{format_padic(letter.exponent)}}}")
        else:
            tokens.append(f"f{letter.index}^{letter.exponent}")
    return " ".join(tokens)


def format_split(x: SplitFramedBraid) -> str:
    braid = format_word(FramedBraidWord(x.n, x.braid)) or "1"
    modulus = "" if x.modulus is None else f" (mod {x.modulus})"
    return f"framing ({','.join(str(a) for a in x.framing)}){modulus} braid {braid}"


if __name__ == "__main__":
    word = parse_word("s1 f1 s2^-1 f2^-2", 3)
    print(f"{word} -> {format_split(split(word))}")
    print(f"f_3 = {elementary_framing_word(3, 3)} -> {format_split(split(elementary_framing_word(3, 3)))}")
