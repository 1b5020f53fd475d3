"""Proper complexity functions on B_n and balls in its Cayley graph.

Two complexities are offered:

* ``geodesic``: the length of the shortest Artin word for the group element,
  found by breadth-first search (exact, but only up to a radius limit);
* ``garside``: ``|inf| + canonical length`` of the left normal form. The
  canonical length alone is not proper (every power of Delta has length 0),
  hence the ``|inf|`` term.

Balls are grown one sphere at a time and cached per strand count, so repeated
queries at desk scale reuse earlier work.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

from .braid import BraidWord, check_strands
from .errors import BudgetExceededError, MalformedInputError, NotFoundError, UsageError
from .garside import BraidElement, generator_element, identity_element, normal_form

DEFAULT_BALL_CAP = 5_000_000
BALL_CAP_ENV = "PLATORDER_BALL_CAP"


def default_ball_cap() -> int:
    raw = os.environ.get(BALL_CAP_ENV)
    if raw is None:
        return DEFAULT_BALL_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError(f"{BALL_CAP_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise UsageError(f"{BALL_CAP_ENV} must be positive")
    return cap


@dataclass(frozen=True)
class ComplexityFunction:
    kind: str = "geodesic"
    radius_limit: int = 8

    def __post_init__(self):
        if self.kind not in ("geodesic", "garside"):
            raise UsageError(f"unknown complexity kind {self.kind!r}")
        if self.radius_limit < 0:
            raise UsageError("radius_limit must be >= 0")

    @classmethod
    def geodesic(cls, radius_limit: int = 8) -> ComplexityFunction:
        return cls("geodesic", radius_limit)

    @classmethod
    def garside(cls) -> ComplexityFunction:
        return cls("garside", 0)

    @classmethod
    def parse(cls, text: str) -> ComplexityFunction:
        """``"garside"``, ``"geodesic"`` or ``"geodesic:<limit>"``."""
        kind, _, limit = text.partition(":")
        if kind == "garside" and not limit:
            return cls.garside()
        if kind == "geodesic":
            try:
                return cls.geodesic(int(limit) if limit else 8)
            except ValueError:
                pass
        raise MalformedInputError(f"bad complexity spec {text!r}")

    def __str__(self) -> str:
        return "garside" if self.kind == "garside" else f"geodesic:{self.radius_limit}"


def letters_for(strands: int) -> tuple[int, ...]:
    """Generators in expansion order: 1, -1, 2, -2, ..."""
    return tuple(s * i for i in range(1, strands) for s in (1, -1))


@dataclass(frozen=True)
class BallEntry:
    element: BraidElement
    witness: BraidWord
    length: int


@dataclass
class Ball:
    strands: int
    radius: int
    entries: dict[str, BallEntry] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, key: str) -> bool:
        return key in self.entries

    def __iter__(self):
        return iter(self.entries.values())

    def length_of(self, key: str) -> int | None:
        entry = self.entries.get(key)
        return None if entry is None else entry.length


class _Spheres:
    """Spheres of the Cayley graph of B_n, grown lazily and never shrunk."""

    def __init__(self, strands: int):
        self.strands = strands
        e = identity_element(strands)
        self.entries: dict[str, BallEntry] = {e.key: BallEntry(e, BraidWord(strands), 0)}
        self.spheres: list[list[str]] = [[e.key]]

    @property
    def radius(self) -> int:
        return len(self.spheres) - 1

    def grow(self, radius: int, cap: int) -> None:
        gens = [(x, generator_element(self.strands, x)) for x in letters_for(self.strands)]
        while self.radius < radius:
            r = self.radius + 1
            new = []
            for key in self.spheres[-1]:
                parent = self.entries[key]
                for x, g in gens:
                    child = parent.element * g
                    if child.key in self.entries:
                        continue
                    if len(self.entries) >= cap:
                        raise BudgetExceededError(
                            f"ball of radius {radius} in B_{self.strands} exceeds {cap} elements",
                            used=len(self.entries))
                    witness = BraidWord(self.strands, parent.witness.letters + (x,))
                    self.entries[child.key] = BallEntry(child, witness, r)
                    new.append(child.key)
            # frontier order is by key, so witnesses never depend on arrival order
            self.spheres.append(sorted(new))


_CACHE: dict[int, _Spheres] = {}


def clear_ball_cache() -> None:
    _CACHE.clear()


def _spheres(strands: int, radius: int, cap: int | None) -> _Spheres:
    check_strands(strands)
    if radius < 0:
        raise UsageError("radius must be >= 0")
    cap = default_ball_cap() if cap is None else cap
    sp = _CACHE.setdefault(strands, _Spheres(strands))
    if sp.radius < radius:
        sp.grow(radius, cap)
    if sum(len(s) for s in sp.spheres[:radius + 1]) > cap:
        raise BudgetExceededError(
            f"ball of radius {radius} in B_{strands} exceeds {cap} elements", used=cap)
    return sp


def ball_enumerate(strands: int, radius: int, cap: int | None = None) -> Ball:
    sp = _spheres(strands, radius, cap)
    ball = Ball(strands, radius)
    for sphere in sp.spheres[:radius + 1]:
        for key in sphere:
            ball.entries[key] = sp.entries[key]
    return ball


def sphere_sizes(strands: int, radius: int, cap: int | None = None) -> list[int]:
    sp = _spheres(strands, radius, cap)
    return [len(s) for s in sp.spheres[:radius + 1]]


def element_geodesic_length(e: BraidElement, radius_limit: int, cap: int | None = None) -> int:
    """Meet-in-the-middle search: a cached ball around 1 and a BFS around ``e``.

    If ``e`` lies outside the inner ball of radius ``a``, the last ``b`` letters
    of a geodesic lead from ``e`` back into that ball, so every hit at BFS
    depth ``b`` gives an upper bound; once the best bound is at most ``a + b``
    it is exact.
    """
    if radius_limit < 0:
        raise UsageError("radius_limit must be >= 0")
    strands = e.strands
    cached = _CACHE[strands].radius if strands in _CACHE else 0
    inner = min(radius_limit, max(cached, (radius_limit + 1) // 2))
    sp = _spheres(strands, inner, cap)

    def dist(key):
        entry = sp.entries.get(key)
        return entry.length if entry is not None and entry.length <= inner else None

    d = dist(e.key)
    if d is not None:
        return d
    gens = [generator_element(strands, x) for x in letters_for(strands)]
    seen = {e.key}
    layer = [e]
    best = None
    for depth in range(1, radius_limit - inner + 1):
        nxt = []
        for x in layer:
            for g in gens:
                y = x * g
                if y.key in seen:
                    continue
                seen.add(y.key)
                nxt.append(y)
                d = dist(y.key)
                if d is not None and (best is None or depth + d < best):
                    best = depth + d
        if best is not None and best <= inner + depth:
            return best
        layer = nxt
    raise NotFoundError(f"no word of length <= {radius_limit} represents this braid",
                        limit=radius_limit)


def geodesic_length(w: BraidWord, radius_limit: int, cap: int | None = None) -> int:
    return element_geodesic_length(normal_form(w), radius_limit, cap)


def garside_complexity(e: BraidElement) -> int:
    return abs(e.inf) + (e.sup - e.inf)


def element_complexity(c: ComplexityFunction, e: BraidElement,
                       known_length: int | None = None) -> int:
    """Complexity of a group element; ``known_length`` skips the search when a ball already has it."""
    if c.kind == "garside":
        return garside_complexity(e)
    if known_length is not None:
        if known_length > c.radius_limit:
            raise NotFoundError(
                f"geodesic length {known_length} exceeds limit {c.radius_limit}",
                limit=c.radius_limit)
        return known_length
    return element_geodesic_length(e, c.radius_limit)


def complexity_of(c: ComplexityFunction, w: BraidWord) -> int:
    return element_complexity(c, normal_form(w))
