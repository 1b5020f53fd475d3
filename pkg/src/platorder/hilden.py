"""Words generating (a subgroup of) the Hilden subgroup H_2n.

Three families of moves fix the standard cap system ``(1,2), (3,4), ...``:

* ``CapTwist(i)``: half twist of cap i, ``sigma_{2i-1}``;
* ``CapThrough(i)``: the left end of cap i+1 travels once around cap i,
  ``sigma_{2i} sigma_{2i-1}^2 sigma_{2i}``;
* ``CapInterchange(i)``: caps i and i+1 swap places,
  ``sigma_{2i} sigma_{2i+1} sigma_{2i-1} sigma_{2i}``.

The list may be redundant; exploration only needs a generating set. Whether
it generates all of H_2n is not checked here, so explored cells may be
finer than true double cosets but are never wrongly merged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord
from .errors import IntegrityError, UsageError
from .plat import plat_signature

DEFAULT_MAX_VERIFY_LEVEL = 4


@dataclass(frozen=True)
class HildenGenerator:
    family: str
    index: int
    word: BraidWord

    @property
    def name(self) -> str:
        return f"{self.family}({self.index})"


def hilden_generators(n: int) -> list[HildenGenerator]:
    if not isinstance(n, int) or n < 1:
        raise UsageError(f"level n must be a positive integer, got {n!r}")
    strands = 2 * n
    gens = [HildenGenerator("CapTwist", i, BraidWord(strands, (2 * i - 1,)))
            for i in range(1, n + 1)]
    gens += [HildenGenerator("CapThrough", i, BraidWord(strands, (2 * i, 2 * i - 1, 2 * i - 1, 2 * i)))
             for i in range(1, n)]
    gens += [HildenGenerator("CapInterchange", i, BraidWord(strands, (2 * i, 2 * i + 1, 2 * i - 1, 2 * i)))
             for i in range(1, n)]
    return gens


@dataclass(frozen=True)
class GeneratorCheck:
    name: str
    inverse: bool
    passed: bool

    def line(self) -> str:
        label = self.name + ("^-1" if self.inverse else "")
        return f"{'PASS' if self.passed else 'FAIL'} hilden {label} keeps the unlink signature"


def verify_generators(n: int, max_level: int = DEFAULT_MAX_VERIFY_LEVEL) -> list[GeneratorCheck]:
    """Check that every generator and its inverse plat-closes to the n-component unlink signature.

    This is a necessary condition for membership in H_2n. A failure means the
    generator table is wrong, so it raises :class:`IntegrityError`.
    """
    if n > max_level:
        raise UsageError(f"verify_generators limited to n <= {max_level}, got {n}")
    unlink = plat_signature(BraidWord(2 * n))
    checks = []
    for g in hilden_generators(n):
        for inverse in (False, True):
            w = g.word.inverse() if inverse else g.word
            checks.append(GeneratorCheck(g.name, inverse, plat_signature(w) == unlink))
    bad = [c for c in checks if not c.passed]
    if bad:
        raise IntegrityError("generator fails unlink check: " + ", ".join(
            c.name + ("^-1" if c.inverse else "") for c in bad))
    return checks
