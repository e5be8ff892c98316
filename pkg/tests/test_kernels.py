"""Backend dispatch: compiled and fallback paths must agree exactly."""

import numpy as np
import pytest

from rootsig.deformation import build_catalan, build_ish, build_shi
from rootsig.errors import CapExceededError, UsageError
from rootsig.kernels import (
    ENV_BACKEND,
    ENV_WORKERS,
    census_histogram,
    complement_count_grid,
    numba_available,
    resolve_backend,
    signatures_for_subsets,
    subset_divisor_lcm,
    warm_kernels,
    worker_count,
)

BACKENDS = ["numpy"] + (["numba"] if numba_available() else [])


def _rows(dm):
    return dm.matrix.to_rows()


def _cols(dm):
    return [list(dm.matrix.column(j)) for j in range(dm.p)]


def test_resolve_backend():
    assert resolve_backend("numpy") == "numpy"
    assert resolve_backend("auto") in ("numba", "numpy")
    if numba_available():
        assert resolve_backend("auto") == "numba"
        assert resolve_backend("numba") == "numba"
    with pytest.raises(UsageError):
        resolve_backend("cuda")


def test_resolve_backend_env(monkeypatch):
    monkeypatch.setenv(ENV_BACKEND, "numpy")
    assert resolve_backend() == "numpy"
    monkeypatch.setenv(ENV_BACKEND, "bogus")
    with pytest.raises(UsageError):
        resolve_backend()


def test_worker_count(monkeypatch):
    assert worker_count(3) == 3
    monkeypatch.setenv(ENV_WORKERS, "2")
    assert worker_count() == 2
    monkeypatch.delenv(ENV_WORKERS)
    assert worker_count() >= 1
    with pytest.raises(UsageError):
        worker_count(0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_census_cells_agree(n):
    reference = None
    for method in ("graph", "cofactor"):
        for backend in BACKENDS:
            hist, side = census_histogram(n, method=method, backend=backend)
            if reference is None:
                reference = (hist.tolist(), side)
            else:
                assert (hist.tolist(), side) == reference, (method, backend)


def test_census_worker_invariance():
    base = None
    for w in (1, 2, 4):
        hist, _ = census_histogram(5, method="graph", workers=w)
        if base is None:
            base = hist.tolist()
        else:
            assert hist.tolist() == base


def test_signatures_for_subsets_cells_agree():
    rng = np.random.default_rng(7)
    n = 5
    p = n * (n + 1) // 2
    combs = np.array([sorted(rng.choice(p, size=n + 1, replace=False)) for _ in range(400)], dtype=np.int64)
    outs = [
        signatures_for_subsets(n, combs, method=m, backend=b)
        for m in ("graph", "cofactor")
        for b in BACKENDS
    ]
    for other in outs[1:]:
        assert np.array_equal(outs[0], other)


def test_complement_grid_cells_agree():
    for dm in (build_shi(2), build_ish(2), build_catalan(2)):
        rows = _rows(dm)
        for q in (1, 2, 3, 5, 6, 12):
            vals = {
                complement_count_grid(rows, q, backend=b, workers=w)
                for b in BACKENDS
                for w in (1, 3)
            }
            assert len(vals) == 1, (dm.labels, q, vals)


def test_complement_grid_affine_and_empty():
    rows = [[1, 0], [0, 1]]
    # z1 != 1 and z2 != 2 mod 5: 4*4
    assert complement_count_grid(rows, 5, rhs=[1, 2]) == 16
    assert complement_count_grid(np.zeros((3, 0), dtype=np.int64), 7) == 343
    with pytest.raises(UsageError):
        complement_count_grid(rows, 5, rhs=[1])


def test_subset_divisor_lcm_cells_agree():
    for dm in (build_shi(2), build_catalan(2), build_ish(3)):
        cols = _cols(dm)
        vals = {subset_divisor_lcm(cols, backend=b, workers=w) for b in BACKENDS for w in (1, 4)}
        assert len(vals) == 1, (dm.labels, vals)


def test_subset_divisor_lcm_cap():
    cols = [[1, 0], [0, 1], [1, 1], [1, 2]]
    with pytest.raises(CapExceededError):
        subset_divisor_lcm(cols, cap=3)
    assert subset_divisor_lcm(cols, cap=3, cap_override=True) == subset_divisor_lcm(cols)


def test_warm_kernels_runs():
    warm_kernels()
