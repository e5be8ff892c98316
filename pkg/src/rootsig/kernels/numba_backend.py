"""numba @njit mirrors of the numpy/pure kernels.

Every kernel is a statement-for-statement port of its counterpart in
numpy_backend; the equivalence test suite pins the two backends to
identical outputs.  All kernels release the GIL so the thread-pool
drivers get real parallelism.
"""

import numpy as np
from numba import njit

_OVERFLOW_LIMIT = np.int64(1) << 40


@njit(cache=True, nogil=True)
def _gcd64(a, b):
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


@njit(cache=True, nogil=True)
def _walk_signature(eu, ev, nv, idx, k, deg, cur, off, nbr_v, nbr_e, seen, stack, alive, leaves, seq):
    """Cycle signature of the subset idx[:k]; mirrors
    numpy_backend.graph_signature_from_edges."""
    for u in range(nv):
        deg[u] = 0
    for e in range(k):
        t = idx[e]
        deg[eu[t]] += 1
        deg[ev[t]] += 1
    off[0] = 0
    for u in range(nv):
        off[u + 1] = off[u] + deg[u]
        cur[u] = off[u]
    for e in range(k):
        t = idx[e]
        u, v = eu[t], ev[t]
        nbr_v[cur[u]] = v
        nbr_e[cur[u]] = e
        cur[u] += 1
        nbr_v[cur[v]] = u
        nbr_e[cur[v]] = e
        cur[v] += 1

    for u in range(nv):
        seen[u] = False
    seen[0] = True
    stack[0] = 0
    top = 1
    reached = 1
    while top > 0:
        top -= 1
        u = stack[top]
        for s in range(off[u], off[u + 1]):
            v = nbr_v[s]
            if not seen[v]:
                seen[v] = True
                reached += 1
                stack[top] = v
                top += 1
    if reached < nv:
        return 0, 0

    for e in range(k):
        alive[e] = True
    ltop = 0
    for u in range(nv):
        if deg[u] == 1:
            leaves[ltop] = u
            ltop += 1
    while ltop > 0:
        ltop -= 1
        u = leaves[ltop]
        if deg[u] != 1:
            continue
        for s in range(off[u], off[u + 1]):
            e = nbr_e[s]
            if alive[e]:
                v = nbr_v[s]
                alive[e] = False
                deg[u] -= 1
                deg[v] -= 1
                if deg[v] == 1:
                    leaves[ltop] = v
                    ltop += 1
                break

    start = 0
    for u in range(nv):
        if deg[u] > 0:
            start = u
            break
    cur_v = start
    last_edge = -1
    slen = 0
    while True:
        seq[slen] = cur_v
        slen += 1
        for s in range(off[cur_v], off[cur_v + 1]):
            e = nbr_e[s]
            if alive[e] and e != last_edge:
                alive[e] = False
                cur_v = nbr_v[s]
                last_edge = e
                break
        if cur_v == start:
            break
    asc = 0
    for i in range(slen):
        if seq[i] < seq[(i + 1) % slen]:
            asc += 1
    dsc = slen - asc
    if asc <= dsc:
        return asc, dsc
    return dsc, asc


@njit(cache=True, nogil=True)
def census_block_graph_nb(eu, ev, nv, t, k, hist):
    side = nv + 2
    idx = np.empty(k + 1, dtype=np.int64)
    deg = np.empty(nv, dtype=np.int64)
    cur = np.empty(nv, dtype=np.int64)
    off = np.empty(nv + 1, dtype=np.int64)
    nbr_v = np.empty(2 * (k + 1), dtype=np.int64)
    nbr_e = np.empty(2 * (k + 1), dtype=np.int64)
    seen = np.empty(nv, dtype=np.bool_)
    stack = np.empty(nv, dtype=np.int64)
    alive = np.empty(k + 1, dtype=np.bool_)
    leaves = np.empty(nv, dtype=np.int64)
    seq = np.empty(k + 1, dtype=np.int64)
    if t < k:
        return
    c = np.arange(k, dtype=np.int64)
    idx[k] = t
    while True:
        for i in range(k):
            idx[i] = c[i]
        a, b = _walk_signature(eu, ev, nv, idx, k + 1, deg, cur, off, nbr_v, nbr_e, seen, stack, alive, leaves, seq)
        hist[a * side + b] += 1
        i = k - 1
        while i >= 0 and c[i] == t - k + i:
            i -= 1
        if i < 0:
            break
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1


@njit(cache=True, nogil=True)
def graph_ab_for_combs_nb(eu, ev, nv, combs):
    npts, kk = combs.shape
    out = np.empty((npts, 2), dtype=np.int64)
    deg = np.empty(nv, dtype=np.int64)
    cur = np.empty(nv, dtype=np.int64)
    off = np.empty(nv + 1, dtype=np.int64)
    nbr_v = np.empty(2 * kk, dtype=np.int64)
    nbr_e = np.empty(2 * kk, dtype=np.int64)
    seen = np.empty(nv, dtype=np.bool_)
    stack = np.empty(nv, dtype=np.int64)
    alive = np.empty(kk, dtype=np.bool_)
    leaves = np.empty(nv, dtype=np.int64)
    seq = np.empty(kk, dtype=np.int64)
    for r in range(npts):
        a, b = _walk_signature(eu, ev, nv, combs[r], kk, deg, cur, off, nbr_v, nbr_e, seen, stack, alive, leaves, seq)
        out[r, 0] = a
        out[r, 1] = b
    return out


@njit(cache=True, nogil=True)
def _det_bareiss_nb(w, n):
    sign = np.int64(1)
    prev = np.int64(1)
    for kk in range(n - 1):
        if w[kk, kk] == 0:
            piv = -1
            for i in range(kk + 1, n):
                if w[i, kk] != 0:
                    piv = i
                    break
            if piv < 0:
                return np.int64(0)
            for j in range(n):
                tmp = w[kk, j]
                w[kk, j] = w[piv, j]
                w[piv, j] = tmp
            sign = -sign
        for i in range(kk + 1, n):
            for j in range(kk + 1, n):
                w[i, j] = (w[i, j] * w[kk, kk] - w[i, kk] * w[kk, j]) // prev
            w[i, kk] = 0
        prev = w[kk, kk]
    return sign * w[n - 1, n - 1]


@njit(cache=True, nogil=True)
def _cofactor_ab_nb(rootmat, idx, kk, w):
    n = rootmat.shape[1]
    plus = 0
    minus = 0
    for k0 in range(kk):
        r = 0
        for i in range(kk):
            if i == k0:
                continue
            for j in range(n):
                w[r, j] = rootmat[idx[i], j]
            r += 1
        d = _det_bareiss_nb(w, n)
        if k0 % 2 == 0:
            d = -d
        if d == 1:
            plus += 1
        elif d == -1:
            minus += 1
    if plus <= minus:
        return plus, minus
    return minus, plus


@njit(cache=True, nogil=True)
def census_block_cofactor_nb(rootmat, nv, t, k, hist):
    side = nv + 2
    n = rootmat.shape[1]
    idx = np.empty(k + 1, dtype=np.int64)
    w = np.empty((n, n), dtype=np.int64)
    if t < k:
        return
    c = np.arange(k, dtype=np.int64)
    idx[k] = t
    while True:
        for i in range(k):
            idx[i] = c[i]
        a, b = _cofactor_ab_nb(rootmat, idx, k + 1, w)
        hist[a * side + b] += 1
        i = k - 1
        while i >= 0 and c[i] == t - k + i:
            i -= 1
        if i < 0:
            break
        c[i] += 1
        for j in range(i + 1, k):
            c[j] = c[j - 1] + 1


@njit(cache=True, nogil=True)
def cofactor_ab_for_combs_nb(rootmat, combs):
    npts, kk = combs.shape
    n = rootmat.shape[1]
    out = np.empty((npts, 2), dtype=np.int64)
    w = np.empty((n, n), dtype=np.int64)
    for r in range(npts):
        a, b = _cofactor_ab_nb(rootmat, combs[r], kk, w)
        out[r, 0] = a
        out[r, 1] = b
    return out


@njit(cache=True, nogil=True)
def complement_count_block_nb(cmod, q, z0, rhs):
    rows, p = cmod.shape
    dots = np.empty(p, dtype=np.int64)
    for j in range(p):
        dots[j] = z0 * cmod[0, j]
    if rows == 1:
        for j in range(p):
            if (dots[j] - rhs[j]) % q == 0:
                return np.int64(0)
        return np.int64(1)
    z = np.zeros(rows - 1, dtype=np.int64)
    count = np.int64(0)
    while True:
        good = True
        for j in range(p):
            if (dots[j] - rhs[j]) % q == 0:
                good = False
                break
        if good:
            count += 1
        lvl = rows - 2
        while lvl >= 0:
            z[lvl] += 1
            for j in range(p):
                dots[j] += cmod[lvl + 1, j]
            if z[lvl] < q:
                break
            for j in range(p):
                dots[j] -= q * cmod[lvl + 1, j]
            z[lvl] = 0
            lvl -= 1
        if lvl < 0:
            break
    return count


@njit(cache=True, nogil=True)
def subset_sweep_nb(cols, mask_lo, mask_hi):
    """(lcm of largest divisors over masks in range, overflow flag)."""
    rows, p = cols.shape
    w = np.empty((rows, p), dtype=np.int64)
    acc = np.int64(1)
    for mask in range(mask_lo, mask_hi):
        cnt = 0
        m = mask
        j = 0
        while m:
            if m & 1:
                for r in range(rows):
                    w[r, cnt] = cols[r, j]
                cnt += 1
            m >>= 1
            j += 1
        t = 0
        big = np.int64(1)
        lim = rows if rows < cnt else cnt
        while t < lim:
            pi = -1
            pj = -1
            for i in range(t, rows):
                for jj in range(t, cnt):
                    if w[i, jj] != 0:
                        pi = i
                        pj = jj
                        break
                if pi >= 0:
                    break
            if pi < 0:
                break
            for jj in range(t, cnt):
                tmp = w[t, jj]
                w[t, jj] = w[pi, jj]
                w[pi, jj] = tmp
            for i in range(t, rows):
                tmp = w[i, t]
                w[i, t] = w[i, pj]
                w[i, pj] = tmp
            while True:
                changed = False
                for i in range(t + 1, rows):
                    if w[i, t] == 0:
                        continue
                    f = w[i, t] // w[t, t]
                    if f != 0:
                        for jj in range(t, cnt):
                            w[i, jj] -= f * w[t, jj]
                            if w[i, jj] > _OVERFLOW_LIMIT or -w[i, jj] > _OVERFLOW_LIMIT:
                                return acc, True
                    if w[i, t] != 0:
                        for jj in range(t, cnt):
                            tmp = w[t, jj]
                            w[t, jj] = w[i, jj]
                            w[i, jj] = tmp
                        changed = True
                for jj in range(t + 1, cnt):
                    if w[t, jj] == 0:
                        continue
                    f = w[t, jj] // w[t, t]
                    if f != 0:
                        for i in range(t, rows):
                            w[i, jj] -= f * w[i, t]
                            if w[i, jj] > _OVERFLOW_LIMIT or -w[i, jj] > _OVERFLOW_LIMIT:
                                return acc, True
                    if w[t, jj] != 0:
                        for i in range(t, rows):
                            tmp = w[i, t]
                            w[i, t] = w[i, jj]
                            w[i, jj] = tmp
                        changed = True
                if not changed:
                    break
            d = w[t, t]
            if d < 0:
                d = -d
            big = big // _gcd64(big, d) * d
            t += 1
        acc = acc // _gcd64(acc, big) * big
        if acc > _OVERFLOW_LIMIT:
            return acc, True
    return acc, False
