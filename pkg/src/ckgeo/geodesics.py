"""Closed-form geodesic machinery: lengths, standard representatives,
continuation rules, dead-end probes, and length tables.

Everything in this module is formula-driven (no search).  The brute-force
counterparts live in :mod:`ckgeo.oracle`; the test suite certifies that the
two routes agree exactly on whole balls.

All closed forms are stated for *normalized* elements (m ≥ 0, n ≥ 0) and
extended to the other quadrants through the flip isometries, which preserve
word length letter-for-letter.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .core import Element, GENERATORS, evaluate, multiply, normalize_quadrant
from .words import LETTERS, Word, free_reduce


def _run(letter: str, signed: int) -> str:
    """A run of ``signed`` copies of a generator (negative = inverse)."""
    if signed >= 0:
        return letter * signed
    return letter.upper() * (-signed)


def std_rep(g: Element) -> Word:
    """The standard geodesic representative of ``g``.

    For normalized g = (k, m, n) it is the freely reduced form of

        b^{k+m} · a · b^{k} · a^{n-1}

    i.e. all excess b-steps are taken in the first column, all centre-loading
    b-steps in the second, and the remaining a-steps close the word (an a⁻¹
    when n = 0).  For other quadrants the word is pulled back through the
    flip letter maps, so ``evaluate(std_rep(g)) == g`` always.
    """
    record = normalize_quadrant(g)
    k, m, n = record.normalized
    word = free_reduce(_run("b", k + m) + "a" + _run("b", k) + _run("a", n - 1))
    return record.pull_back_word(word)


def length(g: Element) -> int:
    """Word length of ``g`` (closed form).

    Normalized coordinates: m + n when k = 0, else |k+m| + |k| + 1 + |n−1|.
    """
    k, m, n = normalize_quadrant(g).normalized
    if k == 0:
        return m + n
    return abs(k + m) + abs(k) + 1 + abs(n - 1)


def is_geodesic(w: Word) -> bool:
    """True iff ``w`` spells its evaluation with no wasted letters."""
    return len(w) == length(evaluate(w))


def continuations(g: Element) -> str:
    """The letters that extend a geodesic to ``g`` by one: all s with
    length(g·s) = length(g) + 1, in canonical order."""
    base = length(g)
    return "".join(
        s for s in LETTERS if length(multiply(g, GENERATORS[s])) == base + 1
    )


class RegionCase(enum.Enum):
    """Position of a normalized element relative to the sign of k and the
    balance between |k| and m; drives the continuation rule."""

    NEG_K_DOMINANT = "neg_k_dominant"  # k < 0 and |k| > m
    NEG_K_SMALL_EVEN = "neg_k_small_even"  # k < 0, |k| <= m, n even
    NEG_K_SMALL_ODD = "neg_k_small_odd"  # k < 0, |k| <= m, n odd
    POS_K = "pos_k"  # k > 0
    ZERO_K = "zero_k"  # k = 0
    UNNORMALIZED = "unnormalized"  # never returned; see classify_region


def classify_region(g: Element) -> RegionCase:
    """Classify after internal normalization (never returns UNNORMALIZED)."""
    k, m, n = normalize_quadrant(g).normalized
    if k == 0:
        return RegionCase.ZERO_K
    if k > 0:
        return RegionCase.POS_K
    if -k > m:
        return RegionCase.NEG_K_DOMINANT
    return RegionCase.NEG_K_SMALL_ODD if n & 1 else RegionCase.NEG_K_SMALL_EVEN


#: Letters the continuation rule names per region, for normalized elements.
#: The rule is exact for n >= 1; at n = 0 with k != 0 only the b-side letter
#: applies (the a direction shortens there, see the dead-end analysis in the
#: test suite).  ZERO_K names no letters.
RULE_LETTERS: dict[RegionCase, str] = {
    RegionCase.NEG_K_DOMINANT: "aB",
    RegionCase.NEG_K_SMALL_EVEN: "ab",
    RegionCase.NEG_K_SMALL_ODD: "aB",
    RegionCase.POS_K: "ab",
    RegionCase.ZERO_K: "",
}


def continuation_rule_letters(case: RegionCase) -> str:
    """The region rule's named letters in canonical order."""
    try:
        return RULE_LETTERS[case]
    except KeyError:
        raise ValueError(f"no continuation rule for {case!r}") from None


def is_dead_end(g: Element) -> bool:
    """True iff no single letter increases the length of ``g``."""
    return continuations(g) == ""


def depth(g: Element, *, cap: int = 64) -> int:
    """Dead-end depth: 0 for elements with a continuation; otherwise the
    largest j such that every product of at most j letters stays at length
    <= length(g).  ``cap`` bounds the search (a guard; the group has no dead
    ends, so the search branch is never expected to run)."""
    if not is_dead_end(g):
        return 0
    base = length(g)
    frontier = {g}
    seen = {g}
    for j in range(1, cap + 1):
        nxt: set[Element] = set()
        for h in frontier:
            for s in GENERATORS.values():
                hs = multiply(h, s)
                if hs in seen:
                    continue
                if length(hs) > base:
                    return j - 1
                seen.add(hs)
                if length(hs) <= base:
                    nxt.add(hs)
        frontier = nxt
    raise RuntimeError(f"depth search exceeded cap={cap} at {g}")


def geodesic_count(g: Element) -> int:
    """Number of geodesic words spelling ``g`` (closed form).

    A geodesic of a normalized element with k != 0 and n >= 1 distributes
    |k| over the odd columns and |k+m| over the even columns independently;
    with n = 0 it is a two-sided detour with |k+m|+1 splits and two mirror
    orientations; with k = 0 only the even columns carry weight.
    """
    k, m, n = normalize_quadrant(g).normalized
    if k == 0:
        half = n // 2
        return math.comb(m + half, half)
    if n == 0:
        return 2 * (abs(k + m) + 1)
    odd_slots = (n + 1) // 2
    even_slots = n // 2 + 1
    return math.comb(abs(k) + odd_slots - 1, odd_slots - 1) * math.comb(
        abs(k + m) + even_slots - 1, even_slots - 1
    )


def closed_ball_elements(radius: int) -> list[Element]:
    """All elements with length <= radius, enumerated from the closed form.

    Scans the coordinate box |k|, |m|, |n| <= radius, which contains the ball
    (each coordinate is bounded by the length).  Independent of the oracle's
    BFS; sorted for determinism.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    out = []
    for k in range(-radius, radius + 1):
        for m in range(-radius, radius + 1):
            for n in range(-radius, radius + 1):
                g = Element(k, m, n)
                if length(g) <= radius:
                    out.append(g)
    out.sort()
    return out


@dataclass(frozen=True)
class LengthTable:
    """Frozen map element -> closed-form length over a whole ball."""

    radius: int
    entries: dict[Element, int] = field(repr=False)

    @classmethod
    def build(cls, radius: int) -> "LengthTable":
        return cls(
            radius=radius,
            entries={g: length(g) for g in closed_ball_elements(radius)},
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, g: Element) -> int:
        return self.entries[g]

    def __contains__(self, g: Element) -> bool:
        return g in self.entries
