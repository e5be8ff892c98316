"""Backend selection and parallel block drivers for the hot loops.

Backends: "numba" (default when importable) and "numpy".  Selection
order: explicit argument, then the ROOTSIG_BACKEND environment variable
(auto|numba|numpy), then auto.  ROOTSIG_WORKERS sets the default worker
count.  Work is partitioned into deterministic blocks and merged with
commutative reductions (sums, lcms), so results never depend on the
worker count or schedule.
"""

from __future__ import annotations

import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import comb, gcd

import numpy as np

from ..errors import CapExceededError, UsageError
from ..rootsystem import coefficient_vector, positive_roots
from . import numpy_backend

try:
    from . import numba_backend

    _NUMBA_IMPORT_ERROR = None
except ImportError as exc:  # pragma: no cover - depends on environment
    numba_backend = None
    _NUMBA_IMPORT_ERROR = str(exc)

ENV_BACKEND = "ROOTSIG_BACKEND"
ENV_WORKERS = "ROOTSIG_WORKERS"

CENSUS_CAP_N = 8
SWEEP_CAP_COLS = 22
GRID_CAP_POINTS = 200_000_000
_PROGRESS_THRESHOLD = 5_000_000


def numba_available() -> bool:
    return numba_backend is not None


def resolve_backend(name: str | None = None) -> str:
    req = (name or os.environ.get(ENV_BACKEND) or "auto").lower()
    if req not in ("auto", "numba", "numpy"):
        raise UsageError(f"unknown backend {req!r}, expected auto, numba, or numpy")
    if req == "auto":
        return "numba" if numba_available() else "numpy"
    if req == "numba" and not numba_available():
        raise UsageError(f"numba backend requested but unavailable: {_NUMBA_IMPORT_ERROR}")
    return req


def worker_count(requested: int | None = None) -> int:
    if requested is None:
        env = os.environ.get(ENV_WORKERS)
        requested = int(env) if env else (os.cpu_count() or 1)
    w = int(requested)
    if w < 1:
        raise UsageError("workers must be at least 1")
    return w


def _progress(msg: str) -> None:
    print(msg, file=sys.stderr, flush=True)


def _edge_arrays(n: int):
    roots = positive_roots(n)
    eu = np.array([r.i - 1 for r in roots], dtype=np.int64)
    ev = np.array([r.j - 1 for r in roots], dtype=np.int64)
    return roots, eu, ev


def _root_matrices(n: int):
    roots = positive_roots(n)
    vecs = [coefficient_vector(r, n) for r in roots]
    return (
        np.array(vecs, dtype=np.float64),
        [list(v) for v in vecs],
        np.array(vecs, dtype=np.int64),
    )


def census_histogram(n: int, method: str = "graph", backend: str | None = None, workers: int | None = None):
    """Histogram of signatures over all (n+1)-subsets of the positive
    roots of A_n.  Returns (flat histogram, side) with key a*side+b."""
    if method not in ("graph", "cofactor"):
        raise UsageError(f"unknown method {method!r}, expected graph or cofactor")
    be = resolve_backend(backend)
    w = worker_count(workers)
    roots, eu, ev = _edge_arrays(n)
    p = len(roots)
    nv = n + 1
    side = nv + 2
    total = comb(p, n + 1)
    chatty = total >= _PROGRESS_THRESHOLD
    if chatty:
        _progress(f"census n={n}: {total} subsets, {p - n} blocks, backend={be}")
    rootvecs_f, rootvecs_i, rootmat = _root_matrices(n)

    def run_block(t: int) -> np.ndarray:
        hist = np.zeros(side * side, dtype=np.int64)
        if method == "graph":
            if be == "numba":
                numba_backend.census_block_graph_nb(eu, ev, nv, t, n, hist)
            else:
                numpy_backend.census_block_graph(eu, ev, nv, t, n, hist)
        else:
            if be == "numba":
                numba_backend.census_block_cofactor_nb(rootmat, nv, t, n, hist)
            else:
                numpy_backend.census_block_cofactor(rootvecs_f, rootvecs_i, nv, t, n, hist)
        return hist

    blocks = list(range(n, p))
    merged = np.zeros(side * side, dtype=np.int64)
    if w == 1:
        for done, t in enumerate(blocks, 1):
            merged += run_block(t)
            if chatty and done % 8 == 0:
                _progress(f"census n={n}: {done}/{len(blocks)} blocks done")
    else:
        with ThreadPoolExecutor(max_workers=w) as pool:
            for hist in pool.map(run_block, blocks):
                merged += hist
    return merged, side


def signatures_for_subsets(n: int, combs, method: str = "graph", backend: str | None = None) -> np.ndarray:
    """(N, 2) array of sorted signatures for explicit root-index subsets."""
    if method not in ("graph", "cofactor"):
        raise UsageError(f"unknown method {method!r}, expected graph or cofactor")
    be = resolve_backend(backend)
    combs = np.asarray(combs, dtype=np.int64)
    _, eu, ev = _edge_arrays(n)
    if method == "graph":
        if be == "numba":
            return numba_backend.graph_ab_for_combs_nb(eu, ev, n + 1, combs)
        return numpy_backend.graph_ab_for_combs(eu, ev, n + 1, combs)
    rootvecs_f, rootvecs_i, rootmat = _root_matrices(n)
    if be == "numba":
        return numba_backend.cofactor_ab_for_combs_nb(rootmat, combs)
    return numpy_backend.cofactor_ab_for_combs(rootvecs_f, rootvecs_i, combs)


def complement_count_grid(
    column_rows,
    q: int,
    rhs=None,
    backend: str | None = None,
    workers: int | None = None,
    cap: int = GRID_CAP_POINTS,
    cap_override: bool = False,
):
    """Number of z in (Z_q)^rows with z.c_j != rhs_j (mod q) for every
    column c_j.  column_rows is a rows x p integer array-like."""
    if q < 1:
        raise UsageError("q must be at least 1")
    cmod = np.array(column_rows, dtype=np.int64)
    if cmod.ndim != 2:
        raise UsageError("expected a rows x p matrix")
    rows, p = cmod.shape
    if p == 0:
        return q**rows
    points = q**rows
    if points > cap and not cap_override:
        raise CapExceededError(
            f"grid of {points} points exceeds the cap of {cap}; pass cap_override to force",
            cap=cap,
        )
    if rhs is None:
        rhs_arr = np.zeros(p, dtype=np.int64)
    else:
        rhs_arr = np.array(rhs, dtype=np.int64)
        if rhs_arr.shape != (p,):
            raise UsageError("rhs length must match column count")
    be = resolve_backend(backend)
    w = worker_count(workers)
    if points >= _PROGRESS_THRESHOLD:
        _progress(f"point count q={q}: {points} residue vectors, backend={be}")

    def run_block(z0: int) -> int:
        if be == "numba":
            return int(numba_backend.complement_count_block_nb(cmod, q, z0, rhs_arr))
        return numpy_backend.complement_count_block(cmod, q, z0, rhs_arr)

    if w == 1 or q == 1:
        return sum(run_block(z0) for z0 in range(q))
    with ThreadPoolExecutor(max_workers=w) as pool:
        return sum(pool.map(run_block, range(q)))


def subset_divisor_lcm(
    columns,
    backend: str | None = None,
    workers: int | None = None,
    cap: int = SWEEP_CAP_COLS,
    cap_override: bool = False,
) -> int:
    """lcm over all nonempty column subsets of the largest elementary
    divisor.  columns is a list of p columns (each of length rows)."""
    cols = [list(map(int, c)) for c in columns]
    p = len(cols)
    if p == 0:
        return 1
    if p > cap and not cap_override:
        raise CapExceededError(
            f"{p} columns means {2**p - 1} subsets, over the cap of {cap} columns; "
            "use mu_period_bound or pass cap_override",
            cap=cap,
        )
    be = resolve_backend(backend)
    w = worker_count(workers)
    nmasks = (1 << p) - 1
    if nmasks >= _PROGRESS_THRESHOLD:
        _progress(f"divisor sweep: {nmasks} column subsets, backend={be}")
    colmat = np.array(cols, dtype=np.int64).T.copy()  # rows x p

    nblocks = min(nmasks, max(w * 4, 1))
    bounds = [1 + (nmasks * i) // nblocks for i in range(nblocks + 1)]
    ranges = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]

    def run_range(span) -> int:
        lo, hi = span
        if be == "numba":
            val, overflow = numba_backend.subset_sweep_nb(colmat, lo, hi)
            if not overflow:
                return int(val)
            # rare: fall back to exact arithmetic for the whole span
        return numpy_backend.subset_divisor_lcm_range(cols, lo, hi)

    acc = 1
    if w == 1:
        for span in ranges:
            v = run_range(span)
            acc = acc * v // gcd(acc, v)
    else:
        with ThreadPoolExecutor(max_workers=w) as pool:
            for v in pool.map(run_range, ranges):
                acc = acc * v // gcd(acc, v)
    return acc


def warm_kernels() -> None:
    """Trigger jit compilation on tiny inputs so timed runs measure the
    algorithm, not the compiler.  No-op on the numpy backend."""
    if not numba_available():
        return
    census_histogram(2, "graph", backend="numba", workers=1)
    census_histogram(2, "cofactor", backend="numba", workers=1)
    signatures_for_subsets(2, [[0, 1, 2]], "graph", backend="numba")
    signatures_for_subsets(2, [[0, 1, 2]], "cofactor", backend="numba")
    complement_count_grid([[1, 0], [0, 1]], 3, backend="numba", workers=1)
    subset_divisor_lcm([[1, 0], [0, 2]], backend="numba", workers=1)
