"""The Dehornoy order on braid groups, decided by handle reduction.

Convention: a word is sigma-positive when its LOWEST generator index occurs
only with positive exponent, and ``a < b`` iff ``a^{-1} b`` is sigma-positive.
Every report that depends on the order names this convention via
:data:`CONVENTION`.

A sigma_i-handle is a factor ``sigma_i^e v sigma_i^{-e}`` in which ``v`` only
uses generators of index > i. Reducing it replaces every ``sigma_{i+1}^d`` of
``v`` by ``sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e`` and drops the two ends.
A handle-free word is freely reduced and has a single-signed lowest index.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable

from .braid import BraidWord, concat, free_reduce
from .errors import BudgetExceededError, ContractViolationError, IntegrityError, UsageError
from .garside import word_problem_equal

CONVENTION = "sigma-positive = lowest generator index occurs only positively; a < b iff a^-1 b is sigma-positive"

DEFAULT_STEP_BUDGET = 10**6


class Sign(enum.Enum):
    TRIVIAL = 0
    POSITIVE = 1
    NEGATIVE = -1


@dataclass(frozen=True)
class SigmaClass:
    sign: Sign
    main_index: int | None = None

    def __str__(self) -> str:
        if self.sign is Sign.TRIVIAL:
            return "Trivial"
        return f"{self.sign.name.capitalize()}({self.main_index})"


class OrderOutcome(enum.Enum):
    LESS = "LT"
    EQUAL = "EQ"
    GREATER = "GT"


def _handles(letters: tuple[int, ...]) -> list[tuple[int, int]]:
    """All handles as ``(start, end)`` index pairs, ordered by end position."""
    found = []
    stack: list[int] = []  # positions with strictly increasing |letter|
    for j, x in enumerate(letters):
        i = abs(x)
        while stack and abs(letters[stack[-1]]) > i:
            stack.pop()
        if stack:
            k = stack[-1]
            if letters[k] == -x:
                found.append((k, j))
        stack.append(j)
    return found


def is_handle_free(w: BraidWord) -> bool:
    return not _handles(w.letters)


def _pick_handle(letters: tuple[int, ...]) -> tuple[int, int] | None:
    handles = _handles(letters)
    if not handles:
        return None
    by_index: dict[int, list[tuple[int, int]]] = {}
    for h in handles:
        by_index.setdefault(abs(letters[h[0]]), []).append(h)

    def permitted(h):
        k, j = h
        inner = by_index.get(abs(letters[k]) + 1, ())
        return not any(k < a and b < j for a, b in inner)

    # lowest main index first, then leftmost; only permitted handles (no
    # sigma_{i+1}-handle inside), which is what guarantees termination
    for i in sorted(by_index):
        for h in sorted(by_index[i]):
            if permitted(h):
                return h
    raise IntegrityError("no permitted handle found although handles exist")


def _reduce_handle(letters: tuple[int, ...], k: int, j: int) -> tuple[int, ...]:
    i = abs(letters[k])
    e = 1 if letters[k] > 0 else -1
    out = list(letters[:k])
    for x in letters[k + 1:j]:
        if abs(x) == i + 1:
            d = 1 if x > 0 else -1
            out += [-e * (i + 1), d * i, e * (i + 1)]
        else:
            out.append(x)
    out += letters[j + 1:]
    return tuple(out)


def handle_reduce(w: BraidWord, step_budget: int = DEFAULT_STEP_BUDGET) -> BraidWord:
    if step_budget < 1:
        raise UsageError("step_budget must be positive")
    letters = free_reduce(w).letters
    steps = 0
    while (h := _pick_handle(letters)) is not None:
        if steps >= step_budget:
            raise BudgetExceededError(
                f"handle reduction exceeded {step_budget} steps", used=steps)
        letters = _reduce_handle(letters, *h)
        steps += 1
    return BraidWord(w.strands, letters)


def sigma_classify(w: BraidWord) -> SigmaClass:
    if not w.letters:
        return SigmaClass(Sign.TRIVIAL)
    low = min(abs(x) for x in w.letters)
    signs = {x > 0 for x in w.letters if abs(x) == low}
    if len(signs) != 1:
        raise ContractViolationError(
            f"word {w} is not handle-free: sigma_{low} occurs with both signs")
    return SigmaClass(Sign.POSITIVE if signs.pop() else Sign.NEGATIVE, low)


def dehornoy_compare(a: BraidWord, b: BraidWord,
                     step_budget: int = DEFAULT_STEP_BUDGET) -> OrderOutcome:
    if a.strands != b.strands:
        raise UsageError(f"strand counts differ: {a.strands} vs {b.strands}")
    if word_problem_equal(a, b):
        return OrderOutcome.EQUAL
    cls = sigma_classify(handle_reduce(concat(a.inverse(), b), step_budget))
    if cls.sign is Sign.TRIVIAL:
        raise IntegrityError(f"handle reduction emptied a^-1 b for distinct braids {a} / {b}")
    return OrderOutcome.LESS if cls.sign is Sign.POSITIVE else OrderOutcome.GREATER


def _cmp(a: BraidWord, b: BraidWord) -> int:
    outcome = dehornoy_compare(a, b)
    if outcome is OrderOutcome.EQUAL:
        # same group element: order the spellings so results never depend on input order
        ka, kb = (len(a), a.letters), (len(b), b.letters)
        return (ka > kb) - (ka < kb)
    return -1 if outcome is OrderOutcome.LESS else 1


dehornoy_key = cmp_to_key(_cmp)


def dehornoy_sorted(ws: Iterable[BraidWord]) -> list[BraidWord]:
    return sorted(ws, key=dehornoy_key)


def dehornoy_min(ws: Iterable[BraidWord]) -> BraidWord:
    ws = list(ws)
    if not ws:
        raise UsageError("dehornoy_min of an empty set")
    if len({w.strands for w in ws}) != 1:
        raise UsageError("dehornoy_min needs a common strand count")
    best = ws[0]
    for w in ws[1:]:
        if _cmp(w, best) < 0:
            best = w
    return best
