"""Normal-form arithmetic for the group ⟨a, b | [aba⁻¹b, a] = [b, aba⁻¹b] = 1⟩.

The word t = aba⁻¹b is central, and every element factors uniquely as
t^k · b^m · a^n.  Elements are therefore integer triples (k, m, n):

* ``n`` — the a-coordinate (exponent sum of a),
* ``m`` — the b-coordinate, twisted by the parity of n,
* ``k`` — the central coordinate, the signed area accumulated by a word's
  lattice path (see :func:`lattice_path`).

Generators: a = (0, 0, 1), b = (0, 1, 0), t = (1, 0, 0).  Multiplication
twists the incoming b-coordinate by (−1)^n and feeds b-steps taken at odd
a-position into the centre:

    (k₁, m₁, n₁) · (k₂, m₂, n₂) = (k₁ + k₂ + m₂·par(n₁),
                                   m₁ + m₂·(−1)^{n₁},
                                   n₁ + n₂)

where par(n) ∈ {0, 1} is the parity of n.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import ParseError
from .words import Letter, LetterMapKind, Word


class Element(NamedTuple):
    """Group element in normal form t^k b^m a^n."""

    k: int
    m: int
    n: int

    def format(self) -> str:
        return f"({self.k},{self.m},{self.n})"

    @classmethod
    def parse(cls, text: str) -> "Element":
        """Parse ``"(k,m,n)"`` (parentheses and whitespace optional)."""
        match = re.fullmatch(
            r"\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*", text
        )
        if match is None:
            raise ParseError(f"expected an element like (k,m,n), got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)), int(match.group(3)))

    def to_dict(self) -> dict[str, int]:
        return {"k": self.k, "m": self.m, "n": self.n}


IDENTITY = Element(0, 0, 0)

#: The central word t = a b a⁻¹ b and its normal form.
CENTRAL_WORD: Word = "abAb"
CENTRAL_ELEMENT = Element(1, 0, 0)

GENERATORS: dict[Letter, Element] = {
    "a": Element(0, 0, 1),
    "A": Element(0, 0, -1),
    "b": Element(0, 1, 0),
    "B": Element(0, -1, 0),
}


def par(n: int) -> int:
    """Parity of ``n`` as a nonnegative bit (par(−1) == 1)."""
    return n & 1


def multiply(g: Element, h: Element) -> Element:
    """Group product g · h in normal-form coordinates."""
    p = g.n & 1
    return Element(
        g.k + h.k + (h.m if p else 0),
        g.m + (-h.m if p else h.m),
        g.n + h.n,
    )


def inverse(g: Element) -> Element:
    """Group inverse: multiply(g, inverse(g)) == IDENTITY."""
    p = g.n & 1
    m_inv = g.m if p else -g.m
    return Element(-g.k - (m_inv if p else 0), m_inv, -g.n)


def evaluate(w: Word) -> Element:
    """Fold a word through normal-form multiplication, left to right."""
    k = m = n = 0
    for c in w:
        if c == "a":
            n += 1
        elif c == "A":
            n -= 1
        elif c == "b":
            if n & 1:
                k += 1
                m -= 1
            else:
                m += 1
        elif c == "B":
            if n & 1:
                k -= 1
                m += 1
            else:
                m -= 1
        else:
            raise ValueError(f"not a letter: {c!r}")
    return Element(k, m, n)


@dataclass(frozen=True)
class PathPoint:
    """A lattice-path vertex with the signed area swept so far."""

    x: int
    y: int
    area: int


def lattice_path(w: Word) -> list[PathPoint]:
    """Trace a word as a walk on the integer lattice, letter by letter.

    ``a``/``A`` move one unit along x; ``b``/``B`` move one unit along y,
    with the drawn direction flipped in odd columns.  A vertical step taken
    in an odd column additionally sweeps one signed unit of area.  This fold
    never calls :func:`multiply`; it is the independent cross-check for
    :func:`evaluate`: the final point of ``lattice_path(w)`` is
    ``(x, y, area) == (n, m, k)`` of ``evaluate(w)``.
    """
    x = y = area = 0
    points = [PathPoint(0, 0, 0)]
    for c in w:
        if c == "a":
            x += 1
        elif c == "A":
            x -= 1
        elif c == "b" or c == "B":
            s = 1 if c == "b" else -1
            if x & 1:
                y -= s
                area += s
            else:
                y += s
        else:
            raise ValueError(f"not a letter: {c!r}")
        points.append(PathPoint(x, y, area))
    return points


class IsometryKind(enum.Enum):
    """Self-isometries of the group used to normalize into m ≥ 0, n ≥ 0.

    ``N_FLIP`` negates the a-coordinate: (k, m, n) ↦ (k, m, −n); it is induced
    by the letter map that swaps a ↔ a⁻¹.  ``FULL_FLIP`` is inversion-like
    negation of all coordinates: (k, m, n) ↦ (−k, −m, −n); it is induced by
    inverting every letter.  The two commute and are involutions.
    """

    N_FLIP = "n_flip"
    FULL_FLIP = "full_flip"


_ISOMETRY_LETTER_MAP = {
    IsometryKind.N_FLIP: LetterMapKind.FLIP_A,
    IsometryKind.FULL_FLIP: LetterMapKind.FLIP_BOTH,
}


def letter_map_for(kind: IsometryKind) -> LetterMapKind:
    """The alphabet bijection that induces a given isometry."""
    return _ISOMETRY_LETTER_MAP[kind]


def apply_isometry(kind: IsometryKind, g: Element) -> Element:
    if kind is IsometryKind.N_FLIP:
        return Element(g.k, g.m, -g.n)
    if kind is IsometryKind.FULL_FLIP:
        return Element(-g.k, -g.m, -g.n)
    raise ValueError(f"unknown isometry: {kind!r}")


def is_normalized(g: Element) -> bool:
    """True iff g lies in the preferred quadrant m ≥ 0, n ≥ 0."""
    return g.m >= 0 and g.n >= 0


@dataclass(frozen=True)
class NormalizationRecord:
    """Result of moving an element into the quadrant m ≥ 0, n ≥ 0.

    ``applied`` lists the isometries used, in application order.  Because the
    induced letter maps commute, applying them (in any order) to a word for
    ``normalized`` yields a word for ``original`` and vice versa.
    """

    original: Element
    normalized: Element
    applied: tuple[IsometryKind, ...]

    def pull_back_word(self, w: Word) -> Word:
        """Map a word for ``normalized`` to a word for ``original``."""
        from .words import apply_letter_map

        for kind in self.applied:
            w = apply_letter_map(letter_map_for(kind), w)
        return w


def normalize_quadrant(g: Element) -> NormalizationRecord:
    """Normalize into m ≥ 0, n ≥ 0 using the fewest flips.

    Preference order when several choices work (i.e. on the axes):
    no flip, then N_FLIP alone, then FULL_FLIP alone, then both.
    """
    if g.m >= 0 and g.n >= 0:
        return NormalizationRecord(g, g, ())
    if g.m >= 0 and g.n < 0:
        return NormalizationRecord(g, Element(g.k, g.m, -g.n), (IsometryKind.N_FLIP,))
    if g.m < 0 and g.n <= 0:
        return NormalizationRecord(
            g, Element(-g.k, -g.m, -g.n), (IsometryKind.FULL_FLIP,)
        )
    return NormalizationRecord(
        g,
        Element(-g.k, -g.m, g.n),
        (IsometryKind.FULL_FLIP, IsometryKind.N_FLIP),
    )


def project_to_klein(g: Element) -> tuple[int, int]:
    """Quotient by the centre ⟨t⟩: forget k, keep (m, n)."""
    return (g.m, g.n)
