"""Budgeted exploration of Hilden double cosets H_2n \\ B_2n / H_2n.

A cell is grown from a seed braid by left and right multiplication with
Hilden generators and their inverses. Two restrictions keep it finite:

* every element visited must lie in the ball of radius ``ball_radius``
  (no detours through longer braids);
* along any path from the seed at most ``move_depth`` generators are applied
  on each side, so the two Hilden factors stay in a finite set.

Cells are therefore under-approximations of true double cosets. Growing the
budget can only merge cells, never split them, and two explored cells that
share a member belong to the same double coset. Signature equality is never
used to decide that two cells coincide.

Inside a cell the canonical representative is the Dehornoy-least element
among the members of minimal complexity, which is the budgeted version of
the canonical representative of a double coset.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from .braid import BraidWord, check_strands, format_word
from .complexity import Ball, ComplexityFunction, ball_enumerate, element_complexity
from .dehornoy import CONVENTION, OrderOutcome, dehornoy_compare, dehornoy_key, dehornoy_sorted
from .errors import NotFoundError, UsageError
from .garside import BraidElement, normal_form
from .hilden import hilden_generators
from .plat import PlatSignature, plat_signature

CELL_NOTE = ("cells are explored under a budget: they under-approximate double cosets, "
             "can only merge (never split) as budgets grow, and grouping by signature "
             "is a signature class, not a link type")


@dataclass(frozen=True)
class Budget:
    ball_radius: int = 5
    move_depth: int = 4
    complexity: ComplexityFunction = field(default_factory=ComplexityFunction.geodesic)

    def __post_init__(self):
        if self.ball_radius < 0 or self.move_depth < 0:
            raise UsageError("budget components must be >= 0")

    def to_json(self) -> dict:
        return {"ball_radius": self.ball_radius, "move_depth": self.move_depth,
                "complexity": str(self.complexity)}


class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # smaller representative wins so the structure is order-independent
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def groups(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


@lru_cache(maxsize=None)
def hilden_move_elements(strands: int) -> tuple[BraidElement, ...]:
    words = []
    for g in hilden_generators(strands // 2):
        words += [g.word, g.word.inverse()]
    return tuple(normal_form(w) for w in words)


_NEIGHBOURS: dict[tuple[int, str, str], tuple[str, ...]] = {}


def _neighbours(ball: Ball, key: str, side: str) -> tuple[str, ...]:
    """Keys reachable from ``key`` by one Hilden move on ``side``, staying in the ball."""
    cache_key = (ball.strands, key, side)
    found = _NEIGHBOURS.get(cache_key)
    if found is None:
        e = ball.entries[key].element
        prods = [(h * e) if side == "left" else (e * h)
                 for h in hilden_move_elements(ball.strands)]
        # products are cached unfiltered; the ball radius is applied per call
        found = tuple(p.key for p in prods)
        _NEIGHBOURS[cache_key] = found
    return tuple(k for k in found if k in ball.entries)


@dataclass
class CosetCell:
    strands: int
    budget: Budget
    seed: BraidWord
    members: dict[str, BraidWord]
    c_min: int
    min_set: list[BraidWord]
    canonical: BraidWord
    saturated_at_radius: bool
    signature: PlatSignature
    seeds: list[BraidWord] = field(default_factory=list)

    @property
    def nf_key(self) -> str:
        return normal_form(self.canonical).key

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "budget": self.budget.to_json(),
            "seed": format_word(self.seed),
            "nf_key": self.nf_key,
            "member_count": len(self.members),
            "c_min": self.c_min,
            "min_set": [format_word(w) for w in self.min_set],
            "canonical": format_word(self.canonical),
            "saturated_at_radius": self.saturated_at_radius,
            "signature": self.signature.to_json(),
            "order_convention": CONVENTION,
        }


def _ball_for(strands: int, budget: Budget) -> Ball:
    check_strands(strands, even=True)
    return ball_enumerate(strands, budget.ball_radius)


def _explore_keys(ball: Ball, seed_key: str, depth: int) -> set[str]:
    start = (seed_key, 0, 0)
    seen = {start}
    queue = deque([start])
    while queue:
        key, left, right = queue.popleft()
        steps = []
        if left < depth:
            steps += [(k, left + 1, right) for k in _neighbours(ball, key, "left")]
        if right < depth:
            steps += [(k, left, right + 1) for k in _neighbours(ball, key, "right")]
        for state in steps:
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return {key for key, _, _ in seen}


def _build_cell(ball: Ball, budget: Budget, seed: BraidWord, keys, signature=None,
                seeds=None) -> CosetCell:
    members = {k: ball.entries[k].witness for k in sorted(keys)}
    cx = {k: element_complexity(budget.complexity, ball.entries[k].element,
                                known_length=ball.entries[k].length)
          for k in members}
    c_min = min(cx.values())
    min_set = dehornoy_sorted(members[k] for k in members if cx[k] == c_min)
    return CosetCell(
        strands=ball.strands,
        budget=budget,
        seed=seed,
        members=members,
        c_min=c_min,
        min_set=min_set,
        canonical=min_set[0],
        saturated_at_radius=all(ball.entries[k].length < budget.ball_radius for k in members),
        signature=signature if signature is not None else plat_signature(seed),
        seeds=list(seeds) if seeds is not None else [seed],
    )


def explore_cell(seed: BraidWord, budget: Budget) -> CosetCell:
    ball = _ball_for(seed.strands, budget)
    key = normal_form(seed).key
    if key not in ball:
        raise UsageError(f"seed {format_word(seed)!r} lies outside the ball of radius "
                         f"{budget.ball_radius}")
    return _build_cell(ball, budget, seed, _explore_keys(ball, key, budget.move_depth))


@dataclass
class OrderReport:
    strands: int
    budget: Budget
    cells: list[CosetCell]
    merges: list[str]
    max_canonical_complexity: int

    def to_json(self) -> dict:
        return {
            "strands": self.strands,
            "budget": self.budget.to_json(),
            "order_convention": CONVENTION,
            "cell_count": len(self.cells),
            "cells": [dict(c.to_json(), seeds=[format_word(s) for s in c.seeds])
                      for c in self.cells],
            "merges": self.merges,
            "max_canonical_complexity": self.max_canonical_complexity,
            "note": CELL_NOTE,
        }


def _merge_cells(ball: Ball, budget: Budget, cells: list[CosetCell]) -> tuple[list[CosetCell], list[str]]:
    uf = UnionFind()
    owner: dict[str, int] = {}
    for i, cell in enumerate(cells):
        uf.find(i)
        for k in cell.members:
            if k in owner:
                uf.union(owner[k], i)
            else:
                owner[k] = i
    merged, notes = [], []
    for root, group in sorted(uf.groups().items()):
        group = sorted(group)
        if len(group) == 1:
            merged.append(cells[group[0]])
            continue
        seeds = [s for i in group for s in cells[i].seeds]
        notes.append("merged seeds " + ", ".join(repr(format_word(s)) for s in seeds)
                     + ": explored cells share a member")
        keys = set().union(*(cells[i].members for i in group))
        first = cells[group[0]]
        merged.append(_build_cell(ball, budget, first.seed, keys, first.signature, seeds))
    return merged, notes


def order_classes(seeds: list[BraidWord], budget: Budget) -> OrderReport:
    if not seeds:
        raise UsageError("order_classes needs at least one seed")
    strands = seeds[0].strands
    if any(s.strands != strands for s in seeds):
        raise UsageError("seeds must share a strand count")
    ball = _ball_for(strands, budget)
    cells = []
    for s in seeds:
        try:
            cells.append(explore_cell(s, budget))
        except (UsageError, NotFoundError) as exc:
            raise type(exc)(f"seed {format_word(s)!r}: {exc}") from exc
    cells, notes = _merge_cells(ball, budget, cells)
    cells.sort(key=lambda c: dehornoy_key(c.canonical))
    return OrderReport(strands, budget, cells, notes, max(c.c_min for c in cells))


_SIGNATURES: dict[tuple[int, str], PlatSignature] = {}


def signature_of_entry(ball: Ball, key: str) -> PlatSignature:
    """Plat signature of a ball element, cached by normal form."""
    sig = _SIGNATURES.get((ball.strands, key))
    if sig is None:
        sig = _SIGNATURES[(ball.strands, key)] = plat_signature(ball.entries[key].witness)
    return sig


@dataclass
class CanPlatReport:
    target_signature: PlatSignature
    budget: Budget
    candidate_set: list[BraidWord]
    c_min_global: int
    global_min_set: list[BraidWord]
    beta_global: BraidWord
    cell_of_beta: CosetCell
    compatible: bool
    candidates_move_closed: bool

    @property
    def verdict(self) -> str:
        if self.compatible:
            return "compatible"
        return "inconclusive under budget" if not self.candidates_move_closed else "incompatible"

    def to_json(self) -> dict:
        out = self.cell_of_beta.to_json()
        out.update({
            "beta_global": format_word(self.beta_global),
            "compatible": self.compatible,
            "c_min_global": self.c_min_global,
            "global_min_set": [format_word(w) for w in self.global_min_set],
            "candidate_count": len(self.candidate_set),
            "candidates_move_closed": self.candidates_move_closed,
            "verdict": self.verdict,
            "target_signature": self.target_signature.to_json(),
            "note": CELL_NOTE,
        })
        return out


def candidates(target: PlatSignature, strands: int, budget: Budget) -> tuple[Ball, list[str]]:
    """Ball elements whose plat signature equals ``target``, in (length, key) order."""
    ball = _ball_for(strands, budget)
    return ball, [k for k in ball.entries if signature_of_entry(ball, k) == target]


def can_plat_search(target: PlatSignature, strands: int, budget: Budget) -> CanPlatReport:
    ball, keys = candidates(target, strands, budget)
    if not keys:
        raise NotFoundError(
            f"no braid in the ball of radius {budget.ball_radius} of B_{strands} "
            f"has the target signature", limit=budget.ball_radius)
    cx = {k: element_complexity(budget.complexity, ball.entries[k].element,
                                known_length=ball.entries[k].length) for k in keys}
    c_min = min(cx.values())
    global_min = dehornoy_sorted(ball.entries[k].witness for k in keys if cx[k] == c_min)
    beta = global_min[0]
    cell = explore_cell(beta, budget)
    keyset = set(keys)
    closed = all(k in keyset
                 for key in keys
                 for side in ("left", "right")
                 for k in _neighbours(ball, key, side))
    compatible = dehornoy_compare(beta, cell.canonical) is OrderOutcome.EQUAL
    return CanPlatReport(target, budget, [ball.entries[k].witness for k in keys], c_min,
                         global_min, beta, cell, compatible, closed)


@dataclass
class SignatureCellsReport:
    target_signature: PlatSignature
    budget: Budget
    cells: list[CosetCell]
    candidate_count: int

    @property
    def saturated(self) -> bool:
        return all(c.saturated_at_radius for c in self.cells)

    @property
    def status(self) -> str:
        if len(self.cells) == 1:
            return "single cell"
        return "unsaturated" if not self.saturated else "multiple cells"

    def to_json(self) -> dict:
        return {
            "target_signature": self.target_signature.to_json(),
            "budget": self.budget.to_json(),
            "candidate_count": self.candidate_count,
            "cell_count": len(self.cells),
            "saturated_at_radius": self.saturated,
            "status": self.status,
            "canonicals": [format_word(c.canonical) for c in self.cells],
            "note": CELL_NOTE,
        }


def signature_cells(target: PlatSignature, strands: int, budget: Budget) -> SignatureCellsReport:
    """Partition every ball element with signature ``target`` into explored cells."""
    ball, keys = candidates(target, strands, budget)
    cells = []
    covered: set[str] = set()
    for k in keys:
        if k in covered:
            continue
        cell = explore_cell(ball.entries[k].witness, budget)
        covered |= cell.members.keys()
        cells.append(cell)
    cells, _ = _merge_cells(ball, budget, cells)
    cells.sort(key=lambda c: dehornoy_key(c.canonical))
    return SignatureCellsReport(target, budget, cells, len(keys))
