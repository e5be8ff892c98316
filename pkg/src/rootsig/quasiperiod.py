"""Characteristic quasi-polynomials, complement counting, lcm periods.

The count M(q) = #{z in (Z_q)^(n+1) : z.c_j != 0 mod q for all
columns} agrees, for q large in each residue class mod the lcm period,
with a monic integer polynomial (the constituent of that class).  The
lcm period is the lcm over all nonempty column subsets of the largest
elementary divisor; the mu bound restricts to bases and is a multiple.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm, prod

from .deformation import DeformationMatrix
from .errors import CapExceededError, FitError, HypothesisError, UsageError
from .exactlinalg import IntMatrix, smith_normal_form
from .kernels import SWEEP_CAP_COLS, complement_count_grid, subset_divisor_lcm
from .tutteeval import enumerate_bases


def _column_rows(matrix_like):
    """Normalize DeformationMatrix / IntMatrix / row-list to a row list."""
    if isinstance(matrix_like, DeformationMatrix):
        return matrix_like.matrix.to_rows()
    if isinstance(matrix_like, IntMatrix):
        return matrix_like.to_rows()
    return [list(map(int, r)) for r in matrix_like]


def complement_count(
    matrix_like,
    q: int,
    rhs=None,
    backend: str | None = None,
    workers: int | None = None,
    cap_override: bool = False,
) -> int:
    """M(q), counting residue vectors off every hyperplane; rhs switches
    to the affine variant z.c_j != rhs_j."""
    rows = _column_rows(matrix_like)
    return complement_count_grid(rows, q, rhs=rhs, backend=backend, workers=workers, cap_override=cap_override)


def complement_count_formula(matrix_like, q: int, cap: int = 16, cap_override: bool = False) -> int:
    """Independent evaluation of M(q) by inclusion-exclusion: each
    column subset J contributes (-1)^|J| q^(rows-r(J)) prod gcd(e_i, q)
    over its elementary divisors.  Central case only."""
    if q < 1:
        raise UsageError("q must be at least 1")
    rows = _column_rows(matrix_like)
    nrows = len(rows)
    p = len(rows[0]) if rows else 0
    if p > cap and not cap_override:
        raise CapExceededError(
            f"inclusion-exclusion over {2**p} subsets exceeds the {cap}-column cap; pass cap_override",
            cap=cap,
        )
    total = q**nrows
    for size in range(1, p + 1):
        for J in combinations(range(p), size):
            sub = [[row[j] for j in J] for row in rows]
            sf = smith_normal_form(sub)
            term = q ** (nrows - sf.rank) * prod(gcd(e, q) for e in sf.divisors)
            total += (-1) ** size * term
    return total


def lcm_period_exact(
    dm,
    backend: str | None = None,
    workers: int | None = None,
    cap: int = SWEEP_CAP_COLS,
    cap_override: bool = False,
) -> int:
    """lcm over all nonempty column subsets of the largest elementary
    divisor; the minimum period of the counting function."""
    rows = _column_rows(dm)
    cols = [[row[j] for row in rows] for j in range(len(rows[0]))] if rows else []
    return subset_divisor_lcm(cols, backend=backend, workers=workers, cap=cap, cap_override=cap_override)


def mu_period_bound(dm: DeformationMatrix, workers: int | None = None) -> int:
    """lcm of base multiplicities; a period, hence a multiple of the
    minimum one."""
    acc = 1
    for rec in enumerate_bases(dm):
        acc = lcm(acc, rec.multiplicity)
    return acc


def period_formula(n: int, l: int, m: int) -> int:
    """Minimum period of the uniform [l,m] cone, valid when |l| <= m
    and m+1 >= n*l: lcm{1, ..., mn-l}."""
    if n < 1:
        raise UsageError("rank n must be at least 1")
    if abs(l) > m:
        raise HypothesisError(f"needs |l| <= m, got l={l} m={m}")
    if m + 1 < n * l:
        raise HypothesisError(f"needs m+1 >= n*l, got m+1={m + 1} n*l={n * l}")
    top = m * n - l
    return lcm(*range(1, top + 1)) if top >= 1 else 1


def period_formula_ish(n: int) -> int:
    """Minimum period of the ish cone: lcm{1, ..., n}."""
    if n < 1:
        raise UsageError("rank n must be at least 1")
    return lcm(*range(1, n + 1)) if n > 1 else 1


@dataclass(frozen=True)
class PeriodReport:
    rho_exact: int
    mu_bound: int
    formula_value: int | None
    agree: bool


def make_period_report(
    dm: DeformationMatrix,
    formula_value: int | None = None,
    backend: str | None = None,
    workers: int | None = None,
    cap_override: bool = False,
) -> PeriodReport:
    rho = lcm_period_exact(dm, backend=backend, workers=workers, cap_override=cap_override)
    mu = mu_period_bound(dm, workers=workers)
    values = {rho, mu} | ({formula_value} if formula_value is not None else set())
    return PeriodReport(rho, mu, formula_value, len(values) == 1)


@dataclass(frozen=True)
class QuasiPolynomial:
    """Constituent k (1-based) governs the class q = k mod period, with
    the class of period itself being q = 0.  Coefficients ascending."""

    period: int
    q0: int
    constituents: tuple[tuple[int, ...], ...]

    def constituent_for(self, q: int) -> tuple[int, ...]:
        k = q % self.period
        return self.constituents[(k - 1) % self.period]

    def evaluate(self, q: int) -> int:
        return poly_eval(self.constituent_for(q), q)


def poly_eval(coeffs, q: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * q + c
    return acc


def _lagrange_integer_fit(points: list[tuple[int, int]]) -> tuple[int, ...]:
    """Exact interpolation through the given (q, value) points; raises
    FitError unless all coefficients are integers."""
    coeffs = [Fraction(0)] * len(points)
    for xi, yi in points:
        # build the Lagrange basis polynomial for xi incrementally
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            nxt = [Fraction(0)] * (len(basis) + 1)
            for t, c in enumerate(basis):
                nxt[t] -= c * xj
                nxt[t + 1] += c
            basis = nxt
        scale = Fraction(yi) / denom
        for t, c in enumerate(basis):
            coeffs[t] += c * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise FitError(f"non-integer coefficient {c} in fit; wrong period or q0 underestimated")
        out.append(int(c))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def fit_quasipolynomial(
    dm,
    rho: int | None = None,
    q_max: int = 45,
    backend: str | None = None,
    workers: int | None = None,
    cap_override: bool = False,
) -> QuasiPolynomial:
    """Fit one monic integer constituent per residue class from exact
    counts at q = 1..q_max; q0 is the largest q where the fitted
    constituent disagrees with the count (0 when none does)."""
    rows = _column_rows(dm)
    degree = len(rows)
    if rho is None:
        rho = lcm_period_exact(dm, backend=backend, workers=workers, cap_override=cap_override)
    counts = {q: complement_count(rows, q, backend=backend, workers=workers) for q in range(1, q_max + 1)}

    constituents: list[tuple[int, ...]] = []
    for k in range(1, rho + 1):
        qs = [q for q in range(1, q_max + 1) if q % rho == k % rho]
        if len(qs) < degree + 2:
            raise FitError(
                f"class {k} mod {rho} has {len(qs)} sample points at q_max={q_max}, "
                f"needs at least {degree + 2}"
            )
        window = qs[-(degree + 1) :]
        poly = _lagrange_integer_fit([(q, counts[q]) for q in window])
        if len(poly) != degree + 1 or poly[-1] != 1:
            raise FitError(f"constituent for class {k} mod {rho} is not monic of degree {degree}: {poly}")
        constituents.append(poly)

    qp = QuasiPolynomial(rho, 0, tuple(constituents))
    q0 = 0
    for q in range(1, q_max + 1):
        if qp.evaluate(q) != counts[q]:
            q0 = max(q0, q)
    if q0:
        # the fit windows and one spare verification point must clear q0
        for k in range(1, rho + 1):
            clear = [q for q in range(q0 + 1, q_max + 1) if q % rho == k % rho]
            if len(clear) < degree + 2:
                raise FitError(
                    f"only {len(clear)} agreeing points above q0={q0} for class {k} mod {rho}; raise q_max"
                )
    return QuasiPolynomial(rho, q0, tuple(constituents))


def minimal_fit_period(qp: QuasiPolynomial) -> int:
    """Smallest divisor of the period whose residue classes carry equal
    constituents; equals the period when the fit is minimal."""
    for cand in sorted(d for d in range(1, qp.period + 1) if qp.period % d == 0):
        ok = True
        for k in range(qp.period):
            if qp.constituents[k] != qp.constituents[k % cand]:
                ok = False
                break
        if ok:
            return cand
    return qp.period


def quasipolynomial_to_json_object(qp: QuasiPolynomial) -> dict:
    return {
        "period": qp.period,
        "q0": qp.q0,
        "constituents": [list(c) for c in qp.constituents],
    }
