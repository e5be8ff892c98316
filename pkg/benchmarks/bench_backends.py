"""Timing comparison of the compiled kernels against the pure-numpy
fallbacks on the three hot paths: the signature census, residue-grid
complement counting, and the subset divisor sweep.

Run as:  python3 benchmarks/bench_backends.py [--census-n 6] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from rootsig.deformation import build_catalan, build_shi
from rootsig.kernels import census_histogram, complement_count_grid, numba_available, subset_divisor_lcm, warm_kernels


@dataclass
class Timing:
    name: str
    backend: str
    seconds: float
    result: str


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run(census_n: int, grid_q: int, repeat: int) -> list[Timing]:
    shi = build_shi(census_n - 1 if census_n > 3 else 3).matrix.to_rows()
    sweep_dm = build_catalan(3)
    sweep_cols = [list(sweep_dm.matrix.column(j)) for j in range(sweep_dm.p)]

    jobs = [
        (
            f"census n={census_n} (graph)",
            lambda b: census_histogram(census_n, method="graph", backend=b),
            lambda r: f"{int(r[0].sum())} subsets",
        ),
        (
            f"census n={census_n} (cofactor)",
            lambda b: census_histogram(census_n, method="cofactor", backend=b),
            lambda r: f"{int(r[0].sum())} subsets",
        ),
        (
            f"complement grid q={grid_q}",
            lambda b: complement_count_grid(shi, grid_q, backend=b),
            lambda r: f"M(q)={r}",
        ),
        (
            "divisor sweep (catalan n=3)",
            lambda b: subset_divisor_lcm(sweep_cols, backend=b),
            lambda r: f"lcm={r}",
        ),
    ]

    backends = ["numpy"] + (["numba"] if numba_available() else [])
    out: list[Timing] = []
    for name, fn, fmt in jobs:
        for backend in backends:
            result = fn(backend)  # warm run; also what we report
            secs = _best_of(lambda: fn(backend), repeat)
            out.append(Timing(name, backend, secs, fmt(result)))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--census-n", type=int, default=6)
    ap.add_argument("--grid-q", type=int, default=16)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if numba_available():
        print("warming compiled kernels...", flush=True)
        warm_kernels()
    else:
        print("numba unavailable; numpy fallback only", flush=True)

    rows = run(args.census_n, args.grid_q, args.repeat)
    width = max(len(r.name) for r in rows)
    print(f"\n{'benchmark':<{width}}  {'backend':<7} {'seconds':>10}  result")
    for r in rows:
        print(f"{r.name:<{width}}  {r.backend:<7} {r.seconds:>10.4f}  {r.result}")

    by_name: dict[str, dict[str, float]] = {}
    for r in rows:
        by_name.setdefault(r.name, {})[r.backend] = r.seconds
    if numba_available():
        print()
        for name, t in by_name.items():
            if "numba" in t and "numpy" in t and t["numba"] > 0:
                print(f"{name:<{width}}  numpy/numba speed ratio {t['numpy'] / t['numba']:.1f}x")


if __name__ == "__main__":
    main()
