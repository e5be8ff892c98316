"""Exact integer linear algebra.

Determinants and ranks via fraction-free (Bareiss) elimination, Smith
normal form via Euclidean pivoting, and the arithmetic multiplicity
(product of elementary divisors).  Everything runs on arbitrary
precision Python integers; nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm, prod
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(int(x) for r in rows for x in r)
        return cls(len(rows), ncols, flat)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> "IntMatrix":
        cols = [list(c) for c in columns]
        nrows = len(cols[0]) if cols else 0
        if any(len(c) != nrows for c in cols):
            raise ValueError("ragged columns")
        flat = tuple(int(cols[j][i]) for i in range(nrows) for j in range(len(cols)))
        return cls(nrows, len(cols), flat)

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols][: self.rows] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix_columns(self, indices: Iterable[int]) -> "IntMatrix":
        idx = list(indices)
        flat = tuple(self.entries[i * self.cols + j] for i in range(self.rows) for j in idx)
        return IntMatrix(self.rows, len(idx), flat)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class SmithForm:
    """Elementary divisors e_1 | e_2 | ... | e_r and the rank r."""

    divisors: tuple[int, ...]
    rank: int

    def __post_init__(self):
        if len(self.divisors) != self.rank:
            raise ValueError("divisor count must equal rank")
        for a, b in zip(self.divisors, self.divisors[1:]):
            if b % a != 0:
                raise ValueError("divisor chain violates divisibility")


def _as_rows(m) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return m.to_rows()
    return [list(map(int, r)) for r in m]


def det_rows(rows: list[list[int]]) -> int:
    """Bareiss determinant of a square list-of-lists. Mutates its copy."""
    a = [r[:] for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact by Bareiss: prev divides the cross term
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinant(m: IntMatrix) -> int:
    """Exact determinant of a square matrix."""
    if not isinstance(m, IntMatrix):
        m = IntMatrix.from_rows(m)
    if not m.is_square:
        raise ValueError("determinant requires a square matrix")
    return det_rows(m.to_rows())


def rank(m) -> int:
    """Rank over the rationals, by fraction-free row elimination."""
    a = _as_rows(m)
    if not a or not a[0]:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, nrows):
            if a[i][c] != 0:
                f, g = a[r][c], a[i][c]
                a[i] = [f * y - g * x for x, y in zip(a[r], a[i])]
        r += 1
        if r == nrows:
            break
    return r


def _diagonalize(a: list[list[int]]) -> list[int]:
    """Bring a to diagonal form under unimodular row/column operations.

    Returns the absolute values of the nonzero diagonal entries.  No
    divisibility normalization is performed; use smith_normal_form for
    the canonical chain.
    """
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # locate a pivot
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        # Euclid until row t and column t vanish off the pivot
        while True:
            changed = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                f = a[i][t] // a[t][t]
                if f:
                    a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    changed = True
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                f = a[t][j] // a[t][t]
                if f:
                    for row in a:
                        row[j] -= f * row[t]
                if a[t][j] != 0:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    changed = True
            if not changed:
                break
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def smith_normal_form(m) -> SmithForm:
    """Smith normal form divisors, invariant under row/column permutation."""
    a = _as_rows(m)
    if not a or not a[0]:
        return SmithForm((), 0)
    diag = _diagonalize(a)
    # normalize an arbitrary diagonal to the divisor chain
    d = [x for x in diag if x != 0]
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g
    d.sort()
    return SmithForm(tuple(d), len(d))


def largest_divisor(m) -> int:
    """Largest elementary divisor; 1 for a zero or empty matrix.

    Equals the lcm of the diagonal of any unimodular diagonalization,
    which avoids the full chain normalization.
    """
    a = _as_rows(m)
    if not a or not a[0]:
        return 1
    diag = _diagonalize(a)
    nz = [x for x in diag if x != 0]
    return lcm(*nz) if nz else 1


def arithmetic_multiplicity(m) -> int:
    """Product of the elementary divisors; |det| for square nonsingular m."""
    return prod(smith_normal_form(m).divisors)
