"""Left normal form in the classical Garside structure of B_n.

A braid is stored as ``Delta^inf * s_1 * ... * s_k`` where every ``s_j`` is a
permutation braid (a positive braid in which two strands cross at most once),
identified with its permutation. Adjacent factors are left-weighted: every
generator that can start ``s_{j+1}`` already ends ``s_j``. The half twist
``Delta`` is never stored as a factor; it only shows up through ``inf``.

Normal forms double as the identity of a group element, so :attr:`BraidElement.key`
is the dedup key used everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import (
    BraidWord,
    Permutation,
    compose,
    identity_perm,
    invert_perm,
    transposition,
)
from .errors import MalformedInputError, UsageError


@lru_cache(maxsize=None)
def delta_perm(strands: int) -> Permutation:
    return tuple(range(strands, 0, -1))


@lru_cache(maxsize=None)
def _transpositions(strands: int) -> tuple[Permutation, ...]:
    # index 0 unused so that generator i lives at index i
    return (identity_perm(strands),) + tuple(
        transposition(strands, i) for i in range(1, strands))


def left_descents(p: Permutation) -> list[int]:
    """Generators ``i`` with ``p = sigma_i * p'`` for a permutation braid ``p'``."""
    return [i for i in range(1, len(p)) if p[i - 1] > p[i]]


def right_descents(p: Permutation) -> list[int]:
    """Generators ``i`` with ``p = p' * sigma_i``."""
    inv = invert_perm(p)
    return [i for i in range(1, len(p)) if inv[i - 1] > inv[i]]


def inversions(p: Permutation) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


@lru_cache(maxsize=None)
def simple_word(p: Permutation) -> tuple[int, ...]:
    """Positive word of the permutation braid ``p``, built by sorting inversions.

    At each step the leftmost adjacent pair of strands that still has to cross
    is swapped, so the word has length ``inversions(p)``.
    """
    target = list(p)  # target[pos - 1] = final position of the strand now at pos
    word = []
    while True:
        for i in range(1, len(target)):
            if target[i - 1] > target[i]:
                target[i - 1], target[i] = target[i], target[i - 1]
                word.append(i)
                break
        else:
            return tuple(word)


def tau(p: Permutation) -> Permutation:
    """Conjugation by Delta: sends sigma_i to sigma_{n-i}."""
    n = len(p)
    return tuple(n + 1 - p[n - x] for x in range(1, n + 1))


def is_left_weighted(x: Permutation, y: Permutation) -> bool:
    rd = set(right_descents(x))
    return all(i in rd for i in left_descents(y))


@lru_cache(maxsize=1 << 20)
def _weight_pair(x: Permutation, y: Permutation) -> tuple[Permutation, Permutation]:
    """Slide generators from the front of ``y`` to the back of ``x`` until left-weighted."""
    gens = _transpositions(len(x))
    while True:
        rd = set(right_descents(x))
        for i in left_descents(y):
            if i not in rd:
                t = gens[i]
                x, y = compose(x, t), compose(t, y)
                break
        else:
            return x, y


def _normalize(strands: int, inf: int, factors) -> BraidElement:
    fs = list(factors)
    delta = delta_perm(strands)
    ident = identity_perm(strands)
    dirty = True
    while dirty:
        for j in range(1, len(fs)):
            i = j - 1
            while i >= 0:
                a, b = _weight_pair(fs[i], fs[i + 1])
                if a == fs[i] and b == fs[i + 1]:
                    break
                fs[i], fs[i + 1] = a, b
                i -= 1
        # the insertion pass is enough in practice; re-check so correctness
        # never hangs on that argument
        dirty = any(_weight_pair(fs[j - 1], fs[j]) != (fs[j - 1], fs[j])
                    for j in range(1, len(fs)))
    lo, hi = 0, len(fs)
    while lo < hi and fs[lo] == delta:
        lo += 1
    while hi > lo and fs[hi - 1] == ident:
        hi -= 1
    return BraidElement(strands, inf + lo, tuple(fs[lo:hi]))


@dataclass(frozen=True, slots=True)
class BraidElement:
    strands: int
    inf: int
    factors: tuple[Permutation, ...] = ()

    @property
    def sup(self) -> int:
        return self.inf + len(self.factors)

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def key(self) -> str:
        return "|".join([str(self.inf)] + [",".join(map(str, p)) for p in self.factors])

    def is_identity(self) -> bool:
        return self.inf == 0 and not self.factors

    def __mul__(self, other: BraidElement) -> BraidElement:
        return multiply(self, other)

    def to_word(self) -> BraidWord:
        """Positive-factor realization: ``Delta^inf`` followed by each factor's word."""
        dw = simple_word(delta_perm(self.strands))
        if self.inf >= 0:
            head = dw * self.inf
        else:
            head = tuple(-x for x in reversed(dw)) * (-self.inf)
        body = tuple(x for p in self.factors for x in simple_word(p))
        return BraidWord(self.strands, head + body)

    def permutation(self) -> Permutation:
        perm = identity_perm(self.strands)
        if self.inf % 2:
            perm = delta_perm(self.strands)
        for p in self.factors:
            perm = compose(perm, p)
        return perm

    def check(self) -> None:
        """Raise ``AssertionError`` unless the stored data is a valid left normal form."""
        delta = delta_perm(self.strands)
        ident = identity_perm(self.strands)
        for p in self.factors:
            assert sorted(p) == list(ident), p
            assert p != delta and p != ident, p
        for x, y in zip(self.factors, self.factors[1:]):
            assert is_left_weighted(x, y), (x, y)


def identity_element(strands: int) -> BraidElement:
    return BraidElement(strands, 0, ())


def multiply(a: BraidElement, b: BraidElement) -> BraidElement:
    if a.strands != b.strands:
        raise UsageError("cannot multiply braids with different strand counts")
    head = a.factors
    if b.inf % 2:
        head = tuple(tau(p) for p in head)
    return _normalize(a.strands, a.inf + b.inf, head + b.factors)


@lru_cache(maxsize=None)
def generator_element(strands: int, letter: int) -> BraidElement:
    t = _transpositions(strands)[abs(letter)]
    if letter > 0:
        return _normalize(strands, 0, (t,))
    # sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1})
    return _normalize(strands, -1, (compose(delta_perm(strands), t),))


def element_from_word(w: BraidWord, start: BraidElement | None = None) -> BraidElement:
    e = start if start is not None else identity_element(w.strands)
    for x in w.letters:
        e = multiply(e, generator_element(w.strands, x))
    return e


def normal_form(w: BraidWord) -> BraidElement:
    return element_from_word(w)


def word_problem_equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise UsageError(f"strand counts differ: {u.strands} vs {v.strands}")
    return normal_form(u) == normal_form(v)


def inf_sup(e: BraidElement) -> tuple[int, int]:
    return e.inf, e.sup


def from_key(key: str, strands: int) -> BraidElement:
    """Rebuild an element from its ``nf_key``; rejects keys that are not normal forms."""
    parts = key.split("|")
    try:
        inf = int(parts[0])
        factors = tuple(tuple(int(v) for v in part.split(",")) for part in parts[1:])
    except ValueError:
        raise MalformedInputError(f"bad normal-form key {key!r}") from None
    e = BraidElement(strands, inf, factors)
    if any(len(p) != strands for p in factors):
        raise MalformedInputError(f"key {key!r} does not match {strands} strands")
    try:
        e.check()
    except AssertionError:
        raise MalformedInputError(f"key {key!r} is not a left normal form") from None
    return e

