"""
Symmetric-group combinatorics.
Permutations in one-line notation with the composition convention
(w o v)(i) = w(v(i)), Coxeter length, canonical reduced words, right descents
and the strand-stripping coset decomposition used by the Markov trace.
"""

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple, Union

from .errors import IncompatibleError, ParameterError, ParseError
from ..utils.logger import get_logger

logger = get_logger('symmetric')


@dataclass(frozen=True)
class Perm:
    """A permutation of {1..n}; images[i-1] = w(i)."""
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ParameterError(f"Not a permutation of 1..{len(self.images)}: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return perm_compose(self, other)

    def __str__(self):
        return format_perm(self)


@dataclass(frozen=True)
class InSubgroup:
    """w fixes n; `perm` is its restriction to S_{n-1}."""
    perm: Perm


@dataclass(frozen=True)
class CosetFactor:
    """w = v o c_k with v in S_{n-1} (fixing n) and c_k = s_{n-1} o ... o s_k."""
    v: Perm
    k: int


CosetDecomposition = Union[InSubgroup, CosetFactor]


def _unchecked(images: Tuple[int, ...]) -> Perm:
    obj = object.__new__(Perm)
    object.__setattr__(obj, 'images', images)
    return obj


def perm_identity(n: int) -> Perm:
    if n < 1:
        raise ParameterError(f"Permutation size must be >= 1, got {n}")
    return _unchecked(tuple(range(1, n + 1)))


def simple_reflection(n: int, i: int) -> Perm:
    """The adjacent transposition s_i = (i, i+1) in S_n."""
    if not 1 <= i <= n - 1:
        raise ParameterError(f"Generator index {i} outside 1..{n - 1}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return _unchecked(tuple(images))


def perm_compose(w: Perm, v: Perm) -> Perm:
    """(w o v)(i) = w(v(i))."""
    if w.n != v.n:
        raise IncompatibleError(f"Size mismatch: S_{w.n} vs S_{v.n}")
    wi = w.images
    return _unchecked(tuple(wi[j - 1] for j in v.images))


def perm_inverse(w: Perm) -> Perm:
    images = [0] * w.n
    for i, image in enumerate(w.images, start=1):
        images[image - 1] = i
    return _unchecked(tuple(images))


def perm_apply(w: Perm, j: int) -> int:
    if not 1 <= j <= w.n:
        raise ParameterError(f"Point {j} outside 1..{w.n}")
    return w.images[j - 1]


def swap_right(w: Perm, i: int) -> Perm:
    """w o s_i: swap the one-line entries at positions i and i+1."""
    images = list(w.images)
    images[i - 1], images[i] = images[i], images[i - 1]
    return _unchecked(tuple(images))


def perm_from_word(n: int, word: Sequence[int]) -> Perm:
    """The product s_{i1} o s_{i2} o ... of a word of generator indices."""
    w = perm_identity(n)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ParameterError(f"Generator index {i} outside 1..{n - 1}")
        w = swap_right(w, i)
    return w


def length(w: Perm) -> int:
    """Coxeter length = number of inversions."""
    images = w.images
    return sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )


def right_descent(w: Perm, i: int) -> bool:
    """True iff length(w o s_i) < length(w), i.e. w(i) > w(i+1)."""
    if not 1 <= i <= w.n - 1:
        raise ParameterError(f"Generator index {i} outside 1..{w.n - 1}")
    return w.images[i - 1] > w.images[i]


def restrict(w: Perm) -> Perm:
    """View a permutation fixing n as an element of S_{n-1}."""
    if w.images[-1] != w.n:
        raise ParameterError(f"{format_perm(w)} does not fix {w.n}")
    return _unchecked(w.images[:-1])


def extend(w: Perm, n: int) -> Perm:
    """The inclusion S_m into S_n, fixing m+1..n."""
    if n < w.n:
        raise ParameterError(f"Cannot extend S_{w.n} into S_{n}")
    return _unchecked(w.images + tuple(range(w.n + 1, n + 1)))


def coset_decompose(w: Perm) -> CosetDecomposition:
    """
    Split w along the top strand.

    If w(n) = n returns InSubgroup(restriction). Otherwise returns the unique
    CosetFactor(v, k) with k = w^{-1}(n), v in S_{n-1} and w = v o c_k, where
    c_k(k) = n, c_k(i) = i - 1 for i > k and c_k(i) = i for i < k.
    Lengths add: length(w) = length(v) + (n - k).
    """
    n = w.n
    if n < 2:
        raise ParameterError("Coset decomposition needs n >= 2")
    images = w.images
    if images[-1] == n:
        return InSubgroup(_unchecked(images[:-1]))
    k = images.index(n) + 1
    # v = w o c_k^{-1}: c_k^{-1}(i) = i for i < k, i + 1 for k <= i < n
    v_images = images[:k - 1] + images[k:]
    return CosetFactor(_unchecked(v_images), k)


def staircase(n: int, k: int) -> Tuple[int, ...]:
    """Generator indices (n-1, n-2, ..., k) of c_k."""
    return tuple(range(n - 1, k - 1, -1))


@lru_cache(maxsize=4096)
def _reduced_word(images: Tuple[int, ...]) -> Tuple[int, ...]:
    n = len(images)
    if n < 2:
        return ()
    decomposition = coset_decompose(_unchecked(images))
    if isinstance(decomposition, InSubgroup):
        return _reduced_word(decomposition.perm.images)
    return _reduced_word(decomposition.v.images) + staircase(n, decomposition.k)


def reduced_word(w: Perm) -> Tuple[int, ...]:
    """
    Canonical reduced word, built from the coset decomposition:
    reduced_word(v) followed by (n-1, ..., k) when w moves n.
    """
    return _reduced_word(w.images)


def reduced_words(w: Perm) -> List[Tuple[int, ...]]:
    """Every reduced word of w (peel right descents recursively)."""
    if length(w) == 0:
        return [()]
    words = []
    for i in range(1, w.n):
        if right_descent(w, i):
            words.extend(prefix + (i,) for prefix in reduced_words(swap_right(w, i)))
    return words


def all_perms(n: int) -> Iterator[Perm]:
    for images in itertools.permutations(range(1, n + 1)):
        yield _unchecked(images)


def longest_element(n: int) -> Perm:
    return _unchecked(tuple(range(n, 0, -1)))


# ============== TEXT FORMAT ==============
_PERM_RE = re.compile(r"^\s*\[\s*(\d+(?:\s*,\s*\d+)*)?\s*\]\s*$")


def format_perm(w: Perm) -> str:
    """One-line notation, e.g. `[3,1,2]`."""
    return "[" + ",".join(str(i) for i in w.images) + "]"


def parse_perm(text: str) -> Perm:
    match = _PERM_RE.match(text)
    if match is None or match.group(1) is None:
        raise ParseError(f"Malformed permutation {text!r}, expected e.g. [3,1,2]", 1, text)
    images = tuple(int(part) for part in match.group(1).split(","))
    return Perm(images)


if __name__ == "__main__":
    w = Perm((3, 1, 2))
    print(f"w = {w}, length {length(w)}, reduced word {reduced_word(w)}")
    print(f"coset decomposition: {coset_decompose(w)}")
    print(f"all reduced words of w0 in S_3: {reduced_words(longest_element(3))}")
