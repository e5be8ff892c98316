"""Vectorized numpy paths plus the canonical pure-Python graph walk.

The graph walk here is the reference implementation of the cycle
signature; the numba backend mirrors it statement for statement.  The
cofactor path batches float determinants, which is safe because every
cofactor of an interval matrix lies in {-1, 0, 1}; a tolerance guard
still routes anything suspicious through exact integer arithmetic.
"""

from __future__ import annotations

from itertools import combinations, islice

import numpy as np

from ..exactlinalg import det_rows

_DET_TOL = 1e-6
_CHUNK = 1 << 18


def graph_signature_from_edges(eu, ev, nv, idx):
    """Signature (a, b) with a <= b of the multigraph with edges
    {(eu[i], ev[i]) : i in idx} on nv vertices; vertices 0-based.

    Requires len(idx) == nv.  Disconnected (equivalently, circuit rank
    at least 2) gives (0, 0); otherwise the graph is unicyclic and the
    unique cycle's cyclic ascent/descent counts are returned.
    """
    k = len(idx)
    adj = [[] for _ in range(nv)]
    for e, t in enumerate(idx):
        u, v = eu[t], ev[t]
        adj[u].append((v, e))
        adj[v].append((u, e))

    seen = [False] * nv
    seen[0] = True
    stack = [0]
    reached = 1
    while stack:
        u = stack.pop()
        for v, _ in adj[u]:
            if not seen[v]:
                seen[v] = True
                reached += 1
                stack.append(v)
    if reached < nv:
        return (0, 0)

    # connected with e == v: unicyclic; strip leaves down to the cycle
    deg = [len(adj[u]) for u in range(nv)]
    alive = [True] * k
    leaves = [u for u in range(nv) if deg[u] == 1]
    while leaves:
        u = leaves.pop()
        if deg[u] != 1:
            continue
        for v, e in adj[u]:
            if alive[e]:
                alive[e] = False
                deg[u] -= 1
                deg[v] -= 1
                if deg[v] == 1:
                    leaves.append(v)
                break

    start = next(u for u in range(nv) if deg[u] > 0)
    seq = []
    cur, last_edge = start, -1
    while True:
        seq.append(cur)
        for v, e in adj[cur]:
            if alive[e] and e != last_edge:
                alive[e] = False
                cur, last_edge = v, e
                break
        if cur == start:
            break
    asc = sum(1 for i in range(len(seq)) if seq[i] < seq[(i + 1) % len(seq)])
    dsc = len(seq) - asc
    return (asc, dsc) if asc <= dsc else (dsc, asc)


def graph_ab_for_combs(eu, ev, nv, combs):
    """Per-subset signatures for an explicit (N, nv) index array."""
    out = np.empty((len(combs), 2), dtype=np.int64)
    for r, idx in enumerate(combs):
        out[r] = graph_signature_from_edges(eu, ev, nv, idx)
    return out


def census_block_graph(eu, ev, nv, t, k, hist):
    """Accumulate the signature histogram over all k-subsets of [0, t)
    together with the fixed column t."""
    side = nv + 2
    for rest in combinations(range(t), k):
        a, b = graph_signature_from_edges(eu, ev, nv, rest + (t,))
        hist[a * side + b] += 1


def _exact_cofactor_ab(rootvecs_int, idx):
    """Exact signature of one subset via integer Bareiss cofactors."""
    rows = [list(rootvecs_int[i]) for i in idx]
    n = len(rows[0])
    plus = minus = 0
    for k0 in range(len(rows)):
        sub = rows[:k0] + rows[k0 + 1 :]
        d = (-1) ** (k0 + 1) * det_rows(sub)
        if d == 1:
            plus += 1
        elif d == -1:
            minus += 1
    return (plus, minus) if plus <= minus else (minus, plus)


def cofactor_ab_for_combs(rootvecs, rootvecs_int, combs):
    """Per-subset signatures via batched float determinants.

    rootvecs is (p, n) float64, combs is an (N, n+1) integer array.
    Any determinant that is not numerically an integer in {-1, 0, 1}
    is recomputed exactly.
    """
    combs = np.asarray(combs, dtype=np.int64)
    npts, kk = combs.shape
    plus = np.zeros(npts, dtype=np.int64)
    minus = np.zeros(npts, dtype=np.int64)
    suspect = np.zeros(npts, dtype=bool)
    stacked = rootvecs[combs]  # (N, n+1, n); subset roots as rows
    for k0 in range(kk):
        sub = np.delete(stacked, k0, axis=1)
        dets = np.linalg.det(sub)
        r = np.rint(dets)
        bad = (np.abs(dets - r) > _DET_TOL) | (np.abs(r) > 1)
        if bad.any():
            suspect |= bad
            r[bad] = 0
        signed = r.astype(np.int64) * (-1 if k0 % 2 == 0 else 1)
        plus += signed == 1
        minus += signed == -1
    lo = np.minimum(plus, minus)
    hi = np.maximum(plus, minus)
    if suspect.any():
        for r_i in np.flatnonzero(suspect):
            lo[r_i], hi[r_i] = _exact_cofactor_ab(rootvecs_int, combs[r_i])
    return np.stack([lo, hi], axis=1)


def census_block_cofactor(rootvecs, rootvecs_int, nv, t, k, hist):
    side = nv + 2
    gen = combinations(range(t), k)
    while True:
        batch = list(islice(gen, _CHUNK))
        if not batch:
            break
        combs = np.array(batch, dtype=np.int64)
        combs = np.hstack([combs, np.full((len(batch), 1), t, dtype=np.int64)])
        ab = cofactor_ab_for_combs(rootvecs, rootvecs_int, combs)
        keys = ab[:, 0] * side + ab[:, 1]
        hist += np.bincount(keys, minlength=side * side).astype(np.int64)


def complement_count_block(cmod, q, z0, rhs):
    """Points (z0, z1, ..., z_{rows-1}) in {z0} x [0,q)^{rows-1} whose
    dot with every column avoids rhs mod q."""
    rows, p = cmod.shape
    if rows == 1:
        dots = (np.full(p, z0, dtype=np.int64) * cmod[0] - rhs) % q
        return int(np.all(dots != 0))
    tail = q ** (rows - 1)
    total = 0
    base = z0 * cmod[0]
    shape = (q,) * (rows - 1)
    for lo in range(0, tail, _CHUNK):
        hi = min(lo + _CHUNK, tail)
        coords = np.unravel_index(np.arange(lo, hi, dtype=np.int64), shape)
        z = np.stack(coords, axis=1)  # (chunk, rows-1)
        dots = (base[None, :] + z @ cmod[1:] - rhs[None, :]) % q
        total += int(np.all(dots != 0, axis=1).sum())
    return total


def subset_divisor_lcm_range(columns, mask_lo, mask_hi):
    """lcm of the largest elementary divisor over column subsets whose
    bitmask lies in [mask_lo, mask_hi); exact integer arithmetic."""
    from math import gcd

    rows = len(columns[0])
    acc = 1
    for mask in range(mask_lo, mask_hi):
        idx = []
        m = mask
        j = 0
        while m:
            if m & 1:
                idx.append(j)
            m >>= 1
            j += 1
        a = [[columns[c][r] for c in idx] for r in range(rows)]
        big = _diag_lcm(a)
        acc = acc * big // gcd(acc, big)
    return acc


def _diag_lcm(a):
    from math import gcd

    from ..exactlinalg import _diagonalize

    diag = [x for x in _diagonalize(a) if x != 0]
    acc = 1
    for x in diag:
        acc = acc * x // gcd(acc, x)
    return acc
