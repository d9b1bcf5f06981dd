# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the pure kernels in ``_kernels_py`` (same contracts).

States are packed into single 64-bit integers (base ``W = 2·radius + 3`` per
coordinate), so the BFS inner loops run on C arithmetic and integer-keyed
dict lookups.  Every public function returns exactly what the pure twin
returns: distance maps keyed by coordinate tuples, plus per-level counts.
"""

from ckgeo.errors import BallBudgetError, GeodesicCapError

BACKEND = "compiled"

#: Packed 3-field keys must fit in a signed 64-bit word: (2r+3)^3 < 2^63.
_MAX_RADIUS = 1_000_000


def ck_ball(int radius, long long max_states=2_000_000):
    """Breadth-first ball of the central extension up to ``radius``."""
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius > _MAX_RADIUS:
        raise ValueError(f"radius exceeds compiled-kernel bound {_MAX_RADIUS}")
    cdef long long W = 2 * radius + 3
    cdef long long OFF = radius + 1
    cdef long long W2 = W * W
    # Packing is linear, so generator steps are fixed key offsets:
    # n±1 -> key±1, m±1 -> key±W, k±1 -> key±W².
    cdef long long ORIGIN = (OFF * W + OFF) * W + OFF
    cdef dict dist = {ORIGIN: 0}
    cdef list frontier = [ORIGIN]
    cdef list levels = [1]
    cdef list nxt
    cdef long long key, c0, c1, c2, c3
    cdef int d
    for d in range(1, radius + 1):
        nxt = []
        for key in frontier:
            c0 = key + 1
            c1 = key - 1
            if (key % W - OFF) & 1:
                c2 = key + W2 - W
                c3 = key - W2 + W
            else:
                c2 = key + W
                c3 = key - W
            if c0 not in dist:
                dist[c0] = d
                nxt.append(c0)
            if c1 not in dist:
                dist[c1] = d
                nxt.append(c1)
            if c2 not in dist:
                dist[c2] = d
                nxt.append(c2)
            if c3 not in dist:
                dist[c3] = d
                nxt.append(c3)
        if len(dist) > max_states:
            raise BallBudgetError(
                f"ball construction exceeded max_states={max_states}"
                f" at radius {d}",
                states=len(dist),
                levels_completed=d - 1,
            )
        frontier = nxt
        levels.append(len(nxt))
    cdef dict out = {}
    cdef long long k, m, n
    cdef object val
    for key, val in dist.items():
        n = key % W - OFF
        m = (key // W) % W - OFF
        k = key // W2 - OFF
        out[(k, m, n)] = val
    return out, levels


def _rank2_ball(int radius, long long max_states, bint twisted):
    if radius < 0:
        raise ValueError("radius must be >= 0")
    if radius > _MAX_RADIUS:
        raise ValueError(f"radius exceeds compiled-kernel bound {_MAX_RADIUS}")
    cdef long long W = 2 * radius + 3
    cdef long long OFF = radius + 1
    cdef long long ORIGIN = OFF * W + OFF
    cdef dict dist = {ORIGIN: 0}
    cdef list frontier = [ORIGIN]
    cdef list levels = [1]
    cdef list nxt
    cdef long long key, c0, c1, c2, c3
    cdef int d
    for d in range(1, radius + 1):
        nxt = []
        for key in frontier:
            c0 = key + 1
            c1 = key - 1
            # The parity twist only swaps the two m-direction candidates,
            # so the unordered candidate set is parity-independent and the
            # twisted and untwisted walks visit identical states.
            c2 = key + W
            c3 = key - W
            if c0 not in dist:
                dist[c0] = d
                nxt.append(c0)
            if c1 not in dist:
                dist[c1] = d
                nxt.append(c1)
            if c2 not in dist:
                dist[c2] = d
                nxt.append(c2)
            if c3 not in dist:
                dist[c3] = d
                nxt.append(c3)
        if len(dist) > max_states:
            raise BallBudgetError(
                f"ball construction exceeded max_states={max_states}"
                f" at radius {d}",
                states=len(dist),
                levels_completed=d - 1,
            )
        frontier = nxt
        levels.append(len(nxt))
    cdef dict out = {}
    cdef long long m, n
    cdef object val
    for key, val in dist.items():
        n = key % W - OFF
        m = key // W - OFF
        out[(m, n)] = val
    return out, levels


def klein_ball(int radius, long long max_states=2_000_000):
    """Ball of the Klein bottle group (centre quotient), states (m, n)."""
    return _rank2_ball(radius, max_states, True)


def z2_ball(int radius, long long max_states=2_000_000):
    """Ball of the free abelian control, states (m, n)."""
    return _rank2_ball(radius, max_states, False)


def _descend(
    dict dist,
    long long k,
    long long m,
    long long n,
    long long remaining,
    long long cap,
    list prefix,
    list out,
):
    """DFS helper for ck_geodesics: peel generators off the left.

    Works directly on the tuple-keyed distance dict (no per-call repacking),
    with the coordinate arithmetic done on C integers.
    """
    cdef long long want
    cdef object got
    if remaining == 0:
        if len(out) >= cap:
            raise GeodesicCapError(f"geodesic enumeration exceeded cap={cap}")
        out.append("".join(prefix))
        return
    want = remaining - 1
    # Left-divide by each generator in canonical order a, A, b, B:
    # the candidates are gen(s)⁻¹ · g.
    got = dist.get((k + m, -m, n - 1))
    if got is not None and <long long> got == want:
        prefix.append("a")
        _descend(dist, k + m, -m, n - 1, want, cap, prefix, out)
        prefix.pop()
    got = dist.get((k + m, -m, n + 1))
    if got is not None and <long long> got == want:
        prefix.append("A")
        _descend(dist, k + m, -m, n + 1, want, cap, prefix, out)
        prefix.pop()
    got = dist.get((k, m - 1, n))
    if got is not None and <long long> got == want:
        prefix.append("b")
        _descend(dist, k, m - 1, n, want, cap, prefix, out)
        prefix.pop()
    got = dist.get((k, m + 1, n))
    if got is not None and <long long> got == want:
        prefix.append("B")
        _descend(dist, k, m + 1, n, want, cap, prefix, out)
        prefix.pop()


def ck_geodesics(dict dist, tuple target, long long cap=100_000):
    """All geodesic words for ``target``, in canonical lexicographic order."""
    if target not in dist:
        raise ValueError(f"target {target} not covered by the ball")
    cdef list out = []
    _descend(
        dist,
        <long long> target[0],
        <long long> target[1],
        <long long> target[2],
        <long long> dist[target],
        cap,
        [],
        out,
    )
    return out
