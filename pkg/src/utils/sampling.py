"""
Seeded random generators for the property suites.
Random algebra elements, subalgebra elements, framed braid words and p-adic values.
"""

import numpy as np
from fractions import Fraction
from typing import Optional

from ..config.config import (
    DEFAULT_SEED,
    RANDOM_COEFF_RANGE,
    RANDOM_ELEMENT_TERMS,
    RANDOM_EXPONENT_RANGE,
    RANDOM_WORD_LENGTH,
)
from ..core.coeff import LaurentU
from ..core.framed_braids import BraidLetter, FramedBraidWord, FramingLetter
from ..core.padic import PadicApprox
from ..core.symmetric import Perm
from ..core.yokonuma import YBasisElt, YElement, YParams
from .logger import get_logger

logger = get_logger('sampling')


class ElementSampler:
    """Draws reproducible random inputs from one numpy Generator."""

    def __init__(self, seed: Optional[int] = None, rng: Optional[np.random.Generator] = None):
        self.seed = DEFAULT_SEED if seed is None else seed
        self.rng = rng if rng is not None else np.random.default_rng(self.seed)
        logger.debug(f"Sampler initialized with seed {self.seed}")

    def _int(self, low: int, high: int) -> int:
        """Uniform integer in [low, high]."""
        return int(self.rng.integers(low, high + 1))

    def laurent(self, max_terms: int = 2) -> LaurentU:
        """Random non-zero Laurent polynomial with small integer or half-integer coefficients."""
        low, high = RANDOM_COEFF_RANGE
        while True:
            terms = {}
            for _ in range(self._int(1, max_terms)):
                numerator = self._int(low, high)
                denominator = self._int(1, 2)
                terms[self._int(-1, 1)] = Fraction(numerator, denominator)
            value = LaurentU(terms)
            if value:
                return value

    def perm(self, n: int, fix_top: bool = False) -> Perm:
        size = n - 1 if fix_top else n
        images = [int(v) + 1 for v in self.rng.permutation(size)]
        if fix_top:
            images.append(n)
        return Perm(tuple(images))

    def basis_elt(self, params: YParams, subalgebra: bool = False) -> YBasisElt:
        """Uniform basis element; `subalgebra` keeps it on the first n-1 strands."""
        framing = [self._int(0, params.d - 1) for _ in range(params.n)]
        if subalgebra:
            framing[-1] = 0
        return YBasisElt(tuple(framing), self.perm(params.n, fix_top=subalgebra))

    def element(self, params: YParams, terms: int = RANDOM_ELEMENT_TERMS,
                subalgebra: bool = False) -> YElement:
        """
        Random element with up to `terms` basis terms.

        Args:
            params: Algebra parameters
            terms: Maximum number of terms
            subalgebra: Restrict to Y_{d,n-1} inside Y_{d,n}

        Returns:
            A non-zero YElement
        """
        while True:
            data = {}
            for _ in range(self._int(1, terms)):
                data[self.basis_elt(params, subalgebra)] = self.laurent()
            element = YElement(params, data)
            if not element.is_zero():
                return element

    def word(self, n: int, length: int = RANDOM_WORD_LENGTH) -> FramedBraidWord:
        """Random framed braid word of the given length."""
        low, high = RANDOM_EXPONENT_RANGE
        letters = []
        for _ in range(length):
            if n == 1 or self.rng.random() < 0.4:
                letters.append(FramingLetter(self._int(1, n), self._int(low, high)))
            else:
                sign = 1 if self.rng.random() < 0.5 else -1
                letters.append(BraidLetter(self._int(1, n - 1), sign))
        return FramedBraidWord(n, tuple(letters))

    def padic(self, p: int, R: int) -> PadicApprox:
        digits = tuple(self._int(0, p - 1) for _ in range(R))
        return PadicApprox(p, digits)

    def integer(self, low: int = -1000, high: int = 1000) -> int:
        return self._int(low, high)
