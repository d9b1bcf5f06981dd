"""Pure-Python reference kernels for ball construction and geodesic DFS.

These are the hot loops of the brute-force oracle.  A compiled twin with the
same signatures lives in ``_kernels_cy.pyx``; :mod:`ckgeo.kernels` picks one
at import time.  Both twins must return identical values — the test suite
compares them directly, and the benchmark script measures the gap.

State keys in the returned distance maps are plain tuples: ``(k, m, n)`` for
the central extension, ``(m, n)`` for the two rank-2 quotient/control groups.
Level sizes are reported with ``levels[d]`` = number of states at distance d
(so ``levels[0] == 1``).
"""

from __future__ import annotations

from .errors import BallBudgetError, GeodesicCapError

BACKEND = "pure"

#: Canonical letter order used for deterministic enumeration everywhere.
_LETTERS = "aAbB"


def ck_ball(
    radius: int, max_states: int = 2_000_000
) -> tuple[dict[tuple[int, int, int], int], list[int]]:
    """Breadth-first ball of the central extension up to ``radius``.

    Right-multiplication steps on normal-form triples (k, m, n):
    a/A move n; b/B move m, with the direction flipped and one unit of k
    gained/lost in odd columns.
    """
    if radius < 0:
        raise ValueError("radius must be >= 0")
    dist: dict[tuple[int, int, int], int] = {(0, 0, 0): 0}
    frontier: list[tuple[int, int, int]] = [(0, 0, 0)]
    levels = [1]
    for d in range(1, radius + 1):
        nxt: list[tuple[int, int, int]] = []
        for k, m, n in frontier:
            if n & 1:
                steps = (
                    (k, m, n + 1),
                    (k, m, n - 1),
                    (k + 1, m - 1, n),
                    (k - 1, m + 1, n),
                )
            else:
                steps = (
                    (k, m, n + 1),
                    (k, m, n - 1),
                    (k, m + 1, n),
                    (k, m - 1, n),
                )
            for state in steps:
                if state not in dist:
                    dist[state] = d
                    nxt.append(state)
        if len(dist) > max_states:
            raise BallBudgetError(
                f"ball construction exceeded max_states={max_states}"
                f" at radius {d}",
                states=len(dist),
                levels_completed=d - 1,
            )
        frontier = nxt
        levels.append(len(nxt))
    return dist, levels


def _rank2_ball(
    radius: int, max_states: int, twisted: bool
) -> tuple[dict[tuple[int, int], int], list[int]]:
    """Shared BFS for the two rank-2 models on states (m, n)."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    dist: dict[tuple[int, int], int] = {(0, 0): 0}
    frontier: list[tuple[int, int]] = [(0, 0)]
    levels = [1]
    for d in range(1, radius + 1):
        nxt: list[tuple[int, int]] = []
        for m, n in frontier:
            s = -1 if (twisted and n & 1) else 1
            steps = ((m, n + 1), (m, n - 1), (m + s, n), (m - s, n))
            for state in steps:
                if state not in dist:
                    dist[state] = d
                    nxt.append(state)
        if len(dist) > max_states:
            raise BallBudgetError(
                f"ball construction exceeded max_states={max_states}"
                f" at radius {d}",
                states=len(dist),
                levels_completed=d - 1,
            )
        frontier = nxt
        levels.append(len(nxt))
    return dist, levels


def klein_ball(
    radius: int, max_states: int = 2_000_000
) -> tuple[dict[tuple[int, int], int], list[int]]:
    """Ball of the Klein bottle group (centre quotient), states (m, n)."""
    return _rank2_ball(radius, max_states, twisted=True)


def z2_ball(
    radius: int, max_states: int = 2_000_000
) -> tuple[dict[tuple[int, int], int], list[int]]:
    """Ball of the free abelian control, states (m, n)."""
    return _rank2_ball(radius, max_states, twisted=False)


def ck_geodesics(
    dist: dict[tuple[int, int, int], int],
    target: tuple[int, int, int],
    cap: int = 100_000,
) -> list[str]:
    """All geodesic words for ``target``, in canonical lexicographic order.

    ``dist`` must be a ball covering ``target`` (e.g. from :func:`ck_ball`).
    A word s·u is geodesic for g iff u is geodesic for s⁻¹·g, so the DFS
    peels letters off the left, descending one distance level per step;
    trying letters in canonical order emits the words already sorted.
    """
    try:
        total = dist[target]
    except KeyError:
        raise ValueError(f"target {target} not covered by the ball") from None
    out: list[str] = []
    prefix: list[str] = []

    def descend(g: tuple[int, int, int], remaining: int) -> None:
        if remaining == 0:
            if len(out) >= cap:
                raise GeodesicCapError(
                    f"geodesic enumeration for {target} exceeded cap={cap}"
                )
            out.append("".join(prefix))
            return
        k, m, n = g
        # Left-divide by each generator: candidates are gen(s)⁻¹ · g.
        peeled = (
            ("a", (k + m, -m, n - 1)),
            ("A", (k + m, -m, n + 1)),
            ("b", (k, m - 1, n)),
            ("B", (k, m + 1, n)),
        )
        for letter, h in peeled:
            if dist.get(h, -1) == remaining - 1:
                prefix.append(letter)
                descend(h, remaining - 1)
                prefix.pop()

    descend(target, total)
    return out
