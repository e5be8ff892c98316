"""Signatures of (n+1)-tuples of positive roots and their census.

The signature of a tuple S = (b_1, ..., b_{n+1}) is the unordered pair
{a, b} counting the +1 and -1 values among the alternating cofactors
d_k = (-1)^k det(S with column k removed).  Two independent paths are
provided: direct cofactor determinants, and the cycle walk on the
associated multigraph (degenerate {0,0} unless the graph is connected,
in which case it is unicyclic and the cycle's cyclic ascents and
descents are the two counts).

Also here: Eulerian numbers, the closed-form census counts, and the
rooted-forest partition identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial, prod
from typing import Mapping, NamedTuple

from .errors import CapExceededError, UsageError
from .exactlinalg import det_rows
from .kernels import CENSUS_CAP_N, census_histogram
from .kernels.numpy_backend import graph_signature_from_edges
from .rootsystem import RootTuple, coefficient_vector, positive_roots


class Signature(NamedTuple):
    a: int
    b: int


def make_signature(plus: int, minus: int) -> Signature:
    """Unordered: stored with the smaller count first."""
    return Signature(plus, minus) if plus <= minus else Signature(minus, plus)


@lru_cache(maxsize=None)
def eulerian_row(n: int) -> tuple[int, ...]:
    if n < 1:
        raise UsageError("eulerian numbers need n >= 1")
    if n == 1:
        return (1,)
    prev = eulerian_row(n - 1)
    row = []
    for k in range(n):
        left = (k + 1) * prev[k] if k <= n - 2 else 0
        right = (n - k) * prev[k - 1] if k >= 1 else 0
        row.append(left + right)
    return tuple(row)


def eulerian(n: int, k: int) -> int:
    """Permutations of [n] with exactly k descents; 0 out of range."""
    if n < 1:
        raise UsageError("eulerian numbers need n >= 1")
    if k < 0 or k > n - 1:
        return 0
    return eulerian_row(n)[k]


def cyclic_eulerian(n: int, k: int) -> int:
    """Cyclic variant; equals n times eulerian(n-1, k-1), 0 out of range."""
    if n < 1:
        raise UsageError("eulerian numbers need n >= 1")
    if k < 1 or k > n - 1:
        return 0
    return n * eulerian(n - 1, k - 1)


def _require_full_length(s: RootTuple) -> None:
    if len(s.roots) != s.n + 1:
        raise UsageError(f"signature needs exactly n+1 = {s.n + 1} roots, got {len(s.roots)}")


def signature_cofactor(s: RootTuple) -> Signature:
    """Signature via the n+1 exact cofactor determinants."""
    _require_full_length(s)
    vecs = [list(coefficient_vector(r, s.n)) for r in s.roots]
    plus = minus = 0
    for k in range(s.n + 1):
        sub = vecs[:k] + vecs[k + 1 :]
        d = (-1) ** (k + 1) * det_rows(sub)
        if d == 1:
            plus += 1
        elif d == -1:
            minus += 1
    return make_signature(plus, minus)


def signature_graph(s: RootTuple) -> Signature:
    """Signature via the multigraph cycle walk."""
    _require_full_length(s)
    eu = [r.i - 1 for r in s.roots]
    ev = [r.j - 1 for r in s.roots]
    a, b = graph_signature_from_edges(eu, ev, s.n + 1, range(len(eu)))
    return Signature(a, b)


def compute_signature(s: RootTuple, method: str = "graph") -> Signature:
    if method == "graph":
        return signature_graph(s)
    if method == "cofactor":
        return signature_cofactor(s)
    raise UsageError(f"unknown method {method!r}, expected graph or cofactor")


@dataclass(frozen=True)
class SignatureCensus:
    n: int
    counts: Mapping[Signature, int]
    degenerate_count: int

    def total(self) -> int:
        return sum(self.counts.values()) + self.degenerate_count


def census_bruteforce(
    n: int,
    method: str = "graph",
    workers: int | None = None,
    backend: str | None = None,
    cap: int = CENSUS_CAP_N,
    cap_override: bool = False,
) -> SignatureCensus:
    """Exact signature counts over all (n+1)-subsets of the positive
    roots of A_n, deterministic regardless of worker count."""
    if n < 2:
        raise UsageError("census needs n >= 2")
    if n > cap and not cap_override:
        raise CapExceededError(
            f"census cap is n <= {cap} (n={n} means {comb(n * (n + 1) // 2, n + 1)} subsets); "
            "pass cap_override to force",
            cap=cap,
        )
    hist, side = census_histogram(n, method=method, backend=backend, workers=workers)
    counts: dict[Signature, int] = {}
    degenerate = int(hist[0])
    for a in range(side):
        for b in range(a, side):
            if a == 0 and b == 0:
                continue
            c = int(hist[a * side + b])
            if c:
                counts[Signature(a, b)] = c
    return SignatureCensus(n, counts, degenerate)


def s_formula(n: int, a: int, b: int) -> int:
    """Closed-form count of (n+1)-subsets with signature {a,b}."""
    if n < 1:
        raise UsageError("rank n must be at least 1")
    a, b = min(a, b), max(a, b)
    if a < 1 or a + b > n + 1:
        return 0
    if a == b == 1:
        return 0
    u = (n + 1) ** (n + 1 - a - b) * comb(n, a + b - 1) * eulerian(a + b - 1, a - 1)
    if a == b:
        if u % 2:
            raise ArithmeticError(f"u_{{{a},{b}}} = {u} is odd; halving would not be exact")
        return u // 2
    return u


def census_formula(n: int) -> SignatureCensus:
    """The census as predicted by the closed form."""
    if n < 2:
        raise UsageError("census needs n >= 2")
    counts: dict[Signature, int] = {}
    for a in range(1, n + 2):
        for b in range(a, n + 2 - a):
            v = s_formula(n, a, b)
            if v:
                counts[Signature(a, b)] = v
    total = comb(n * (n + 1) // 2, n + 1)
    return SignatureCensus(n, counts, total - sum(counts.values()))


def census_to_json_object(c: SignatureCensus) -> dict[str, int]:
    out = {f"{s.a},{s.b}": v for s, v in c.counts.items()}
    out["degenerate"] = c.degenerate_count
    return out


def census_text_triangle(c: SignatureCensus) -> str:
    """Triangle of s_{a,b} values, one row per a."""
    rows = []
    width = max((len(str(v)) for v in c.counts.values()), default=1)
    amax = max((s.a for s in c.counts), default=1)
    for a in range(1, amax + 1):
        cells = []
        for b in range(a, c.n + 2 - a):
            v = c.counts.get(Signature(a, b), 0)
            cells.append(f"s[{a},{b}]={v:<{width}}")
        rows.append("  ".join(cells).rstrip())
    rows.append(f"degenerate={c.degenerate_count}")
    return "\n".join(rows)


def _int_partitions(n: int, largest: int | None = None):
    """Partitions of n as descending lists."""
    if n == 0:
        yield []
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in _int_partitions(n - first, first):
            yield [first] + rest


def partition_identity_lhs(n: int, x: int, cap: int = 12, cap_override: bool = False) -> int:
    """Sum over set partitions of [n] of x^(#blocks) * prod over blocks
    of (#block)^(#block - 1).  Aggregated over block-size profiles, so
    the Bell-number blowup is avoided, but a cap is kept anyway."""
    if n < 0:
        raise UsageError("n must be nonnegative")
    if n == 0:
        return 1  # empty partition, empty product
    if n > cap and not cap_override:
        raise CapExceededError(f"partition identity cap is n <= {cap}; pass cap_override to force", cap=cap)
    total = 0
    for lam in _int_partitions(n):
        ways = factorial(n)
        for part in lam:
            ways //= factorial(part)
        mult: dict[int, int] = {}
        for part in lam:
            mult[part] = mult.get(part, 0) + 1
        for m in mult.values():
            ways //= factorial(m)
        total += ways * x ** len(lam) * prod(part ** (part - 1) for part in lam)
    return total
