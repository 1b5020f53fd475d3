"""Invariants of the plat closure of a braid on 2n strands.

The plat closure caps the top endpoints in adjacent pairs (1,2), (3,4), ...
and does the same at the bottom. Two invariants of the resulting link are
computed exactly:

* the number of components, by tracing strands through braid and caps;
* the Kauffman bracket, by pushing Temperley-Lieb states (noncrossing
  matchings of the 2n points at the current height) down through the braid.

A letter ``sigma_i^e`` is resolved as ``A^e * (identity smoothing) +
A^-e * (cap-cup e_i)``. The bracket is normalized so the unknot has value 1.

Since Hilden moves include the kink ``sigma_1``, the bracket alone is not
invariant under them; :func:`plat_signature` therefore records the
writhe-normalized bracket for every relative orientation of the components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .braid import BraidWord, check_strands, invert_perm, permutation_of
from .laurent import A, LOOP, LaurentPoly

Matching = tuple[int, ...]  # matching[p] = partner of point p, 0-based


def cap_pairs(strands: int) -> list[tuple[int, int]]:
    """The standard cap system ``(1,2), (3,4), ...`` (1-based)."""
    check_strands(strands, even=True)
    return [(p, p + 1) for p in range(1, strands, 2)]


def _partner(p: int) -> int:
    # 1-based adjacent pairing
    return p + 1 if p % 2 else p - 1


def cap_matching(strands: int) -> Matching:
    return tuple(p ^ 1 for p in range(strands))


@lru_cache(maxsize=None)
def tl_states(strands: int) -> tuple[Matching, ...]:
    """All noncrossing perfect matchings of ``strands`` points, in a fixed order."""
    check_strands(strands, even=True)

    def build(points: tuple[int, ...]):
        if not points:
            yield {}
            return
        first = points[0]
        for k in range(1, len(points), 2):
            inside, outside = points[1:k], points[k + 1:]
            for m_in in build(inside):
                for m_out in build(outside):
                    m = {first: points[k], points[k]: first}
                    m.update(m_in)
                    m.update(m_out)
                    yield m

    return tuple(sorted(tuple(m[p] for p in range(strands))
                        for m in build(tuple(range(strands)))))


def apply_cap_cup(state: Matching, i: int) -> tuple[int, Matching]:
    """Apply ``e_i`` (1-based) below ``state``; returns ``(closed loops, new state)``."""
    p, q = i - 1, i
    if state[p] == q:
        return 1, state
    m = list(state)
    a, b = m[p], m[q]
    m[a], m[b] = b, a
    m[p], m[q] = q, p
    return 0, tuple(m)


def _closing_loops(state: Matching) -> int:
    """Loops formed when ``state`` is closed off by the bottom caps."""
    seen = [False] * len(state)
    loops = 0
    for start in range(len(state)):
        if seen[start]:
            continue
        loops += 1
        p = start
        while not seen[p]:
            seen[p] = True
            q = state[p]
            seen[q] = True
            p = q ^ 1
    return loops


def component_count(w: BraidWord) -> int:
    return len(_components(w))


def _components(w: BraidWord) -> list[list[tuple[int, int]]]:
    """Each component as a list of ``(strand, direction)``; +1 = traversed downward.

    Strands are named by their top endpoint. Tracing starts downward from the
    lowest unvisited top endpoint, so the output is deterministic.
    """
    check_strands(w.strands, even=True)
    perm = permutation_of(w)
    inv = invert_perm(perm)
    seen = set()
    comps = []
    for start in range(1, w.strands + 1):
        if start in seen:
            continue
        comp = []
        s, d = start, 1
        while s not in seen:
            seen.add(s)
            comp.append((s, d))
            if d == 1:
                s, d = inv[_partner(perm[s - 1]) - 1], -1
            else:
                s, d = _partner(s), 1
        comps.append(comp)
    return comps


def kauffman_bracket_plat(w: BraidWord) -> LaurentPoly:
    check_strands(w.strands, even=True)
    vec: dict[Matching, LaurentPoly] = {cap_matching(w.strands): LaurentPoly.constant(1)}
    for x in w.letters:
        i = abs(x)
        keep, smooth = (A, A ** -1) if x > 0 else (A ** -1, A)
        out: dict[Matching, LaurentPoly] = {}
        for state, coeff in vec.items():
            out[state] = out.get(state, LaurentPoly()) + coeff * keep
            loops, new = apply_cap_cup(state, i)
            term = coeff * smooth * (LOOP ** loops)
            out[new] = out.get(new, LaurentPoly()) + term
        vec = {s: c for s, c in out.items() if c}
    total = LaurentPoly()
    for state, coeff in vec.items():
        # one factor of the loop value is divided out: unknot -> 1
        total = total + coeff * LOOP ** (_closing_loops(state) - 1)
    return total


def writhe(w: BraidWord, directions: dict[int, int]) -> int:
    """Writhe of the plat diagram for per-strand directions (+1 down, -1 up).

    A letter ``sigma_i^e`` crossing two parallel strands has sign ``e``; the
    sign flips when the strands run in opposite directions.
    """
    at = list(range(1, w.strands + 1))
    total = 0
    for x in w.letters:
        i = abs(x)
        a, b = at[i - 1], at[i]
        parallel = directions[a] == directions[b]
        total += (1 if x > 0 else -1) * (1 if parallel else -1)
        at[i - 1], at[i] = b, a
    return total


def orientation_classes(w: BraidWord) -> list[dict[int, int]]:
    """Strand directions for each orientation of the components, up to global reversal."""
    comps = _components(w)
    out = []
    for mask in range(1 << (len(comps) - 1)):
        dirs = {}
        for j, comp in enumerate(comps):
            flip = -1 if j and (mask >> (j - 1)) & 1 else 1
            for s, d in comp:
                dirs[s] = d * flip
        out.append(dirs)
    return out


@dataclass(frozen=True)
class PlatSignature:
    components: int
    brackets: tuple[LaurentPoly, ...]

    def to_json(self) -> dict:
        return {"components": self.components, "brackets": [str(p) for p in self.brackets]}

    @classmethod
    def from_json(cls, data: dict) -> PlatSignature:
        polys = tuple(LaurentPoly.parse(t) for t in data["brackets"])
        return cls(int(data["components"]), tuple(sorted(polys, key=str)))


def plat_signature(w: BraidWord) -> PlatSignature:
    bracket = kauffman_bracket_plat(w)
    normalized = []
    for dirs in orientation_classes(w):
        wr = writhe(w, dirs)
        normalized.append((-(A ** 3)) ** -wr * bracket if wr else bracket)
    return PlatSignature(component_count(w), tuple(sorted(normalized, key=str)))


def apply_operator(vec: dict[Matching, LaurentPoly], i: int) -> dict[Matching, LaurentPoly]:
    """Apply ``e_i`` to a linear combination of states."""
    out: dict[Matching, LaurentPoly] = {}
    for state, coeff in vec.items():
        loops, new = apply_cap_cup(state, i)
        out[new] = out.get(new, LaurentPoly()) + coeff * LOOP ** loops
    return {s: c for s, c in out.items() if c}


def tl_relation_checks(max_level: int = 4) -> list[tuple[str, bool]]:
    """Check ``e_i e_i = delta e_i`` and ``e_i e_j e_i = e_i`` (|i - j| = 1) on every state."""
    results = []
    for n in range(1, max_level + 1):
        strands = 2 * n
        states = tl_states(strands)
        ok_sq, ok_braid = True, True
        for state in states:
            basis = {state: LaurentPoly.constant(1)}
            for i in range(1, strands):
                once = apply_operator(basis, i)
                twice = apply_operator(once, i)
                if twice != {s: c * LOOP for s, c in once.items()}:
                    ok_sq = False
                for j in (i - 1, i + 1):
                    if 1 <= j < strands:
                        if apply_operator(apply_operator(once, j), i) != once:
                            ok_braid = False
        results.append((f"TL n={n}: e_i e_i = delta e_i on {len(states)} states", ok_sq))
        results.append((f"TL n={n}: e_i e_(i+-1) e_i = e_i on {len(states)} states", ok_braid))
    return results
