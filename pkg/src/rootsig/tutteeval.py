"""Tutte evaluations at (1,1): base enumeration and closed formulas.

T(1,1) is the number of bases (full-rank column subsets of size n+1);
the arithmetic value adds each base with its multiplicity |det|.
Bases split into three classes: those containing the cone column
(always unimodular), those whose root part repeats a root with two
different shifts, and those on n+1 distinct roots, where the root part
is unicyclic and the multiplicity is the absolute alternating sum of
the cycle's shifts.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterator

from .deformation import DeformationMatrix
from .errors import HypothesisError, UsageError
from .exactlinalg import det_rows, rank
from .kernels import worker_count
from .signature import s_formula


def delta(n: int) -> int:
    """Number of independent n-subsets of the positive roots: (n+1)^(n-1)."""
    if n < 1:
        raise UsageError("rank n must be at least 1")
    return (n + 1) ** (n - 1)


def _binom(x: int, y: int) -> int:
    if y < 0 or x < y:
        return 0
    return comb(x, y)


def tau(n: int, k: int, d: int) -> int:
    """Number of tuples in [1,d]^n summing to k; 0 outside n <= k <= nd."""
    if d < 1:
        raise UsageError("tau needs d >= 1")
    if n < 1 or k < n or k > n * d:
        return 0
    return sum((-1) ** i * comb(n, i) * _binom(k - i * d - 1, n - 1) for i in range((k - n) // d + 1))


def abs_balance_count(a: int, b: int, k: int, l: int, m: int) -> int:
    """Tuples in [l,m]^(a+b) whose first-a sum minus last-b sum has
    absolute value k (k >= 1)."""
    if l > m:
        raise HypothesisError(f"needs l <= m, got l={l} m={m}")
    if a < 1 or b < 1 or k < 1:
        raise UsageError("a, b, k must all be at least 1")
    d = m - l + 1
    k1 = k + a * (1 - l) + b * (m + 1)
    k2 = k + b * (1 - l) + a * (m + 1)
    return tau(a + b, k1, d) + tau(a + b, k2, d)


@dataclass(frozen=True)
class BaseRecord:
    column_indices: tuple[int, ...]
    multiplicity: int
    case_tag: int


@dataclass(frozen=True)
class TutteEval:
    t11: int
    arith11: int
    cases: dict[int, int]
    mode: str


def _case_tag(dm: DeformationMatrix, idx: tuple[int, ...], cone: int) -> int:
    if cone in idx:
        return 1
    roots = [dm.labels[j].split("|")[0] for j in idx]
    return 2 if len(set(roots)) < len(roots) else 3


def enumerate_bases(dm: DeformationMatrix) -> Iterator[BaseRecord]:
    """All nonsingular (n+1)-column subsets, in lexicographic index
    order, with multiplicity |det| and case tag."""
    rows = dm.matrix.to_rows()
    nv = dm.n + 1
    if rank(rows) != nv:
        raise UsageError("matrix is rank-deficient, bases need rank n+1")
    cone = dm.cone_index()
    for idx in combinations(range(dm.p), nv):
        sub = [[rows[i][j] for j in idx] for i in range(nv)]
        d = det_rows(sub)
        if d:
            yield BaseRecord(idx, abs(d), _case_tag(dm, idx, cone))


def tutte11_bruteforce(dm: DeformationMatrix, workers: int | None = None) -> TutteEval:
    """Exact (T(1,1), T_arith(1,1)) by base enumeration; the combination
    space is chunked and merged by sums, so worker count never shows."""
    rows = dm.matrix.to_rows()
    nv = dm.n + 1
    if rank(rows) != nv:
        raise UsageError("matrix is rank-deficient, bases need rank n+1")
    cone = dm.cone_index()
    w = worker_count(workers)

    def tally(chunk) -> tuple[int, int, int, int, int]:
        t11 = arith = c1 = c2 = c3 = 0
        for idx in chunk:
            sub = [[rows[i][j] for j in idx] for i in range(nv)]
            d = det_rows(sub)
            if not d:
                continue
            t11 += 1
            arith += abs(d)
            tag = _case_tag(dm, idx, cone)
            if tag == 1:
                c1 += 1
            elif tag == 2:
                c2 += 1
            else:
                c3 += 1
        return t11, arith, c1, c2, c3

    gen = combinations(range(dm.p), nv)
    chunks = []
    while True:
        chunk = list(islice(gen, 4096))
        if not chunk:
            break
        chunks.append(chunk)
    if w == 1 or len(chunks) <= 1:
        parts = [tally(c) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=w) as pool:
            parts = list(pool.map(tally, chunks))
    t11 = sum(p[0] for p in parts)
    arith = sum(p[1] for p in parts)
    cases = {1: sum(p[2] for p in parts), 2: sum(p[3] for p in parts), 3: sum(p[4] for p in parts)}
    return TutteEval(t11, arith, cases, "bruteforce")


def tutte11_formula(n: int, l: int, m: int, mode: str = "corrected") -> TutteEval:
    """Closed-form (T(1,1), T_arith(1,1)) for the uniform [l,m] cone.

    mode="corrected" takes the unshifted-forest term as delta_n * d^n;
    mode="paper" evaluates the published first term delta_n verbatim,
    which undercounts (kept for documentation, see tests).
    """
    if mode not in ("paper", "corrected"):
        raise UsageError(f"unknown mode {mode!r}, expected paper or corrected")
    if abs(l) > m:
        raise HypothesisError(f"formula needs |l| <= m, got l={l} m={m}")
    d = m - l + 1
    dn = delta(n)

    first = dn * d**n if mode == "corrected" else dn
    second = n * dn * d ** (n - 1) * sum(d - k for k in range(1, m - l + 1))
    second_arith = n * dn * d ** (n - 1) * sum(k * (d - k) for k in range(1, m - l + 1))
    third = 0
    third_arith = 0
    kmax = m * n - l
    for ab in range(3, n + 2):
        for a in range(1, ab // 2 + 1):
            b = ab - a
            s = s_formula(n, a, b)
            if not s:
                continue
            coeff = d ** (n + 1 - ab) * s
            for k in range(1, kmax + 1):
                cnt = abs_balance_count(a, b, k, l, m)
                third += coeff * cnt
                third_arith += coeff * k * cnt
    return TutteEval(
        first + second + third,
        first + second_arith + third_arith,
        {1: first, 2: second, 3: third},
        mode,
    )


def tutte_to_json_object(ev: TutteEval) -> dict:
    return {
        "t11": ev.t11,
        "arith11": ev.arith11,
        "cases": {str(k): v for k, v in sorted(ev.cases.items())},
        "mode": ev.mode,
    }
