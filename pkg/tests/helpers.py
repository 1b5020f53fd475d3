"""Independent oracles and random-word machinery shared by the tests.

Nothing here calls the Garside engine or the Temperley-Lieb transfer code:

* braid (in)equality goes through the unreduced Burau matrix evaluated at an
  exact rational ``t``; different matrices prove the braids differ, and the
  representation is faithful on B_3;
* the Kauffman bracket is recomputed by summing over all 2^crossings
  smoothings of the plat diagram and counting loops with a union-find, with
  sympy doing the polynomial arithmetic.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

from platorder.braid import BraidWord

T = Fraction(3, 2)


def burau(w: BraidWord, t: Fraction = T) -> tuple[tuple[Fraction, ...], ...]:
    n = w.strands
    m = [[Fraction(int(r == c)) for c in range(n)] for r in range(n)]
    for x in w.letters:
        i = abs(x) - 1
        if x > 0:
            block = ((1 - t, t), (Fraction(1), Fraction(0)))
        else:
            block = ((Fraction(0), Fraction(1)), (1 / t, 1 - 1 / t))
        # right-multiply by the block acting on columns i, i + 1
        for row in m:
            a, b = row[i], row[i + 1]
            row[i] = a * block[0][0] + b * block[1][0]
            row[i + 1] = a * block[0][1] + b * block[1][1]
    return tuple(tuple(row) for row in m)


def hand_permutation(w: BraidWord) -> tuple[int, ...]:
    """Track each strand letter by letter; result[p - 1] = final position of strand p."""
    out = []
    for p in range(1, w.strands + 1):
        pos = p
        for x in w.letters:
            i = abs(x)
            if pos == i:
                pos = i + 1
            elif pos == i + 1:
                pos = i
        out.append(pos)
    return tuple(out)


def positive_reduced_words(strands: int, max_len: int):
    """Positive words in which no pair of strands crosses twice (one per simple element)."""
    seen = {}
    for length in range(max_len + 1):
        for letters in itertools.product(range(1, strands), repeat=length):
            w = BraidWord(strands, letters)
            perm = hand_permutation(w)
            inv = sum(1 for a in range(strands) for b in range(a + 1, strands)
                      if perm[a] > perm[b])
            if inv == length and perm not in seen:
                seen[perm] = w
    return seen


A = sympy.Symbol("A")
DELTA = -A**2 - A**-2


def brute_force_bracket(w: BraidWord):
    """Unknot-normalized bracket of the plat closure as a sympy expression."""
    n, m = w.strands, len(w.letters)
    total = 0
    for choice in itertools.product((0, 1), repeat=m):
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                x = parent[x]
            return x

        def join(a, b):
            parent[find(a)] = find(b)

        for p in range(0, n, 2):
            join((0, p), (0, p + 1))
            join((m, p), (m, p + 1))
        weight = 1
        for t, x in enumerate(w.letters):
            i = abs(x) - 1
            sign = 1 if x > 0 else -1
            if choice[t] == 0:
                weight *= A**sign
                for p in range(n):
                    join((t, p), (t + 1, p))
            else:
                weight *= A**-sign
                join((t, i), (t, i + 1))
                join((t + 1, i), (t + 1, i + 1))
                for p in range(n):
                    if p not in (i, i + 1):
                        join((t, p), (t + 1, p))
        nodes = [(t, p) for t in range(m + 1) for p in range(n)]
        loops = len({find(v) for v in nodes})
        total += weight * DELTA**(loops - 1)
    return sympy.expand(total)


def laurent_to_sympy(poly):
    return sum(c * A**e for e, c in poly.terms.items())


# random rewriting with the defining relations -------------------------------------------


def _relators(strands: int):
    rels = []
    for i in range(1, strands - 1):
        j = i + 1
        rels.append((i, j, i, -j, -i, -j))
    for i in range(1, strands):
        for j in range(i + 2, strands):
            rels.append((i, j, -i, -j))
    return rels


def rewrite_once(rng, letters: list[int], strands: int) -> list[int]:
    ops = []
    for k in range(len(letters) - 2):
        a, b, c = letters[k:k + 3]
        if a == c and abs(abs(a) - abs(b)) == 1 and (a > 0) == (b > 0):
            ops.append(("braid", k))
    for k in range(len(letters) - 1):
        a, b = letters[k:k + 2]
        if abs(abs(a) - abs(b)) >= 2:
            ops.append(("commute", k))
        if a == -b:
            ops.append(("cancel", k))
    ops.append(("insert_pair", None))
    if strands > 2:
        ops.append(("insert_relator", None))
    kind, k = rng.choice(ops)
    out = list(letters)
    if kind == "braid":
        a, b = out[k], out[k + 1]
        out[k:k + 3] = [b, a, b]
    elif kind == "commute":
        out[k], out[k + 1] = out[k + 1], out[k]
    elif kind == "cancel":
        del out[k:k + 2]
    elif kind == "insert_pair":
        x = rng.choice((1, -1)) * rng.randint(1, strands - 1)
        pos = rng.randint(0, len(out))
        out[pos:pos] = [x, -x]
    else:
        rel = list(rng.choice(_relators(strands)))
        shift = rng.randrange(len(rel))
        rel = rel[shift:] + rel[:shift]
        if rng.random() < 0.5:
            rel = [-x for x in reversed(rel)]
        pos = rng.randint(0, len(out))
        out[pos:pos] = rel
    return out


def rewrite(rng, w: BraidWord, steps: int = 12) -> BraidWord:
    letters = list(w.letters)
    for _ in range(steps):
        letters = rewrite_once(rng, letters, w.strands)
    return BraidWord(w.strands, tuple(letters))


def sigma_positive_word(rng, strands: int, max_len: int = 12) -> BraidWord:
    """A word whose lowest index occurs, and occurs only positively."""
    low = rng.randint(1, strands - 1)
    length = rng.randint(1, max_len)
    letters = []
    for _ in range(length):
        i = rng.randint(low, strands - 1)
        letters.append(i if i == low else rng.choice((1, -1)) * i)
    if low not in letters:
        letters[rng.randrange(length)] = low
    return BraidWord(strands, tuple(letters))


def hand_components(w: BraidWord) -> int:
    """Plat components by union-find over strands joined by top and bottom caps."""
    perm = hand_permutation(w)
    ends_at = {perm[s - 1]: s for s in range(1, w.strands + 1)}
    parent = list(range(w.strands + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for p in range(1, w.strands, 2):
        parent[find(p)] = find(p + 1)
        parent[find(ends_at[p])] = find(ends_at[p + 1])
    return len({find(s) for s in range(1, w.strands + 1)})


# one "PASS/FAIL criterion ..." line per acceptance test, printed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, text: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"
    ACCEPTANCE_LINES.append(line)
    print(line)
