"""Compare the pure-Python and compiled ball/geodesic kernels.

Runs both backends on the same inputs, checks they agree, and prints a
timing table.  Usage::

    python benchmarks/bench_kernels.py --radius 14 --repeat 3
"""

from __future__ import annotations

import argparse
import statistics
import time

from ckgeo import kernels


def _time(fn, repeat: int) -> tuple[float, object]:
    best: list[float] = []
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best.append(time.perf_counter() - t0)
    return statistics.median(best), result


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--radius", type=int, default=14, help="ball radius (default 14)")
    parser.add_argument("--repeat", type=int, default=3, help="timing repeats (default 3)")
    parser.add_argument(
        "--targets", type=int, default=200, help="geodesic enumerations to time (default 200)"
    )
    args = parser.parse_args(argv)

    pure = kernels.load_backend("pure")
    try:
        compiled = kernels.load_backend("compiled")
    except ImportError:
        print("compiled backend is not built; run pip install -e . first")
        return 1

    rows = []

    t_pure, (dist_pure, levels_pure) = _time(lambda: pure.ck_ball(args.radius), args.repeat)
    t_comp, (dist_comp, levels_comp) = _time(lambda: compiled.ck_ball(args.radius), args.repeat)
    assert levels_pure == levels_comp and dist_pure == dist_comp, "backend mismatch"
    rows.append((f"ck_ball(radius={args.radius}), {len(dist_pure)} states", t_pure, t_comp))

    from ckgeo.core import Element
    from ckgeo.geodesics import geodesic_count

    horizon = [
        key
        for key, d in dist_pure.items()
        if d <= args.radius - 1 and geodesic_count(Element(*key)) <= 50_000
    ]
    targets = horizon[:: max(1, len(horizon) // args.targets)][: args.targets]

    def run_geodesics(backend, dist):
        return [backend.ck_geodesics(dist, t) for t in targets]

    t_pure_g, words_pure = _time(lambda: run_geodesics(pure, dist_pure), args.repeat)
    t_comp_g, words_comp = _time(lambda: run_geodesics(compiled, dist_comp), args.repeat)
    assert words_pure == words_comp, "backend mismatch"
    rows.append((f"ck_geodesics x {len(targets)} targets", t_pure_g, t_comp_g))

    for name, ball in (("klein_ball", "klein_ball"), ("z2_ball", "z2_ball")):
        radius = args.radius * 3
        t_p, res_p = _time(lambda: getattr(pure, ball)(radius), args.repeat)
        t_c, res_c = _time(lambda: getattr(compiled, ball)(radius), args.repeat)
        assert res_p == res_c, "backend mismatch"
        rows.append((f"{name}(radius={radius}), {len(res_p[0])} states", t_p, t_c))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}")
    for name, tp, tc in rows:
        speedup = tp / tc if tc > 0 else float("inf")
        print(f"{name:<{width}}  {tp * 1e3:>8.2f}ms  {tc * 1e3:>8.2f}ms  {speedup:>7.1f}x")
    print("\nresults agree between backends on every input above")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
