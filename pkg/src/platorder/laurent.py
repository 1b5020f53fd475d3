"""Sparse Laurent polynomials in one variable ``A`` with integer coefficients."""

from __future__ import annotations

import re
from typing import Mapping

from .errors import MalformedInputError


class LaurentPoly:
    """Immutable; stored as ``{exponent: coefficient}`` with no zero coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms = {int(e): int(c) for e, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> LaurentPoly:
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial is not a unit")
            return LaurentPoly({e * k: c ** (-k)})
        out = LaurentPoly.constant(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*A^{e}" for e, c in sorted(self._terms.items(), reverse=True))

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"^\s*(-?\d+)\s*\*\s*A\s*\^\s*(-?\d+)\s*$")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``: ``"c1*A^e1 + c2*A^e2 + ..."``."""
        if text.strip() == "0":
            return cls()
        out: dict[int, int] = {}
        for part in text.split(" + "):
            m = cls._TERM.match(part)
            if not m:
                raise MalformedInputError(f"bad Laurent term {part!r}")
            c, e = int(m.group(1)), int(m.group(2))
            out[e] = out.get(e, 0) + c
        return cls(out)


A = LaurentPoly.monomial(1)
LOOP = -(A ** 2) - A ** -2  # value of a closed loop, delta = -A^2 - A^-2
