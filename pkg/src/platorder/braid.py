"""Braid words in the Artin generators.

A letter ``i > 0`` stands for sigma_i and ``-i`` for its inverse. Generator
indices are 1-based, so a word on ``strands`` strands uses ``1 <= |i| <= strands - 1``.

Permutations are tuples of 1-based images: ``perm[p - 1]`` is where the strand
starting at position ``p`` ends up. Words act left to right, so the image of a
product ``u v`` is "apply u, then v" (see :func:`compose`).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInputError, UsageError

Permutation = tuple[int, ...]


def check_strands(strands: int, *, even: bool = False) -> int:
    if not isinstance(strands, int) or strands < 2:
        raise UsageError(f"strand count must be an integer >= 2, got {strands!r}")
    if even and strands % 2:
        raise UsageError(f"plat operations need an even strand count, got {strands}")
    return strands


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        check_strands(self.strands)
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.strands:
                raise MalformedInputError(
                    f"letter {x} out of range for {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> BraidWord:
        return cls(strands, ())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def __str__(self) -> str:
        return format_word(self)


def parse_word(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed integers, e.g. ``"1 -2 1"``."""
    check_strands(strands)
    letters = []
    for token in text.split():
        try:
            x = int(token)
        except ValueError:
            raise MalformedInputError(f"token {token!r} is not an integer") from None
        if x == 0 or abs(x) >= strands:
            raise MalformedInputError(
                f"token {token!r}: generator index out of range for {strands} strands")
        letters.append(x)
    return BraidWord(strands, tuple(letters))


def format_word(w: BraidWord) -> str:
    return " ".join(str(x) for x in w.letters)


def concat(*words: BraidWord) -> BraidWord:
    if not words:
        raise UsageError("concat needs at least one word")
    strands = words[0].strands
    if any(w.strands != strands for w in words):
        raise UsageError("cannot concatenate words with different strand counts")
    return BraidWord(strands, tuple(x for w in words for x in w.letters))


def free_reduce(w: BraidWord) -> BraidWord:
    out: list[int] = []
    for x in w.letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return BraidWord(w.strands, tuple(out))


def identity_perm(strands: int) -> Permutation:
    return tuple(range(1, strands + 1))


def transposition(strands: int, i: int) -> Permutation:
    """Image of sigma_i: swaps positions i and i + 1."""
    images = list(range(1, strands + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Apply ``p`` first, then ``q``; the image of the braid product ``p q``."""
    return tuple(q[x - 1] for x in p)


def invert_perm(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for start, end in enumerate(p, 1):
        inv[end - 1] = start
    return tuple(inv)


def permutation_of(w: BraidWord) -> Permutation:
    # where[k] = current position of the strand that started at k + 1
    where = list(range(1, w.strands + 1))
    at = list(range(1, w.strands + 1))  # at[p - 1] = strand currently at position p
    for x in w.letters:
        i = abs(x)
        a, b = at[i - 1], at[i]
        at[i - 1], at[i] = b, a
        where[a - 1], where[b - 1] = i + 1, i
    return tuple(where)


def random_word(rng, strands: int, length: int) -> BraidWord:
    """Uniform letters, no reduction; ``rng`` is a :class:`random.Random`."""
    return BraidWord(strands, tuple(
        rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length)))

