"""Deformation matrices for type-A arrangements.

For a shift set E_j per positive root, the deformation matrix has one
column (beta, -x) per root beta and shift x in E_beta, plus the final
cone column (0, ..., 0, 1).  Named families: shi = [1-m, m],
catalan = [-m, m], linial = [1, m]; ish replaces each shifted column
(alpha_{i,j}, -1) by (alpha_{1,j}, -i), giving columns (alpha_{1,j}, -x)
for 1 <= x < j.

Column order is fixed everywhere: roots lexicographic, shifts ascending
within a root, cone column last; outputs are stable across runs.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from .errors import HypothesisError, UsageError
from .exactlinalg import IntMatrix
from .rootsystem import PositiveRoot, coefficient_vector, positive_roots

CONE_LABEL = "cone"

FAMILIES = ("uniform", "shi", "catalan", "linial", "ish")


@dataclass(frozen=True)
class DeformationMatrix:
    """(n+1) x p integer matrix with per-column labels.

    Root columns are labeled "i,j|x" (column is the root alpha_{i,j}
    stacked on -x); the homogenizing column is labeled "cone".
    """

    n: int
    matrix: IntMatrix
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != self.matrix.cols:
            raise UsageError("one label per column required")
        if self.matrix.rows != self.n + 1:
            raise UsageError("deformation matrices have n+1 rows")

    @property
    def p(self) -> int:
        return self.matrix.cols

    def columns(self) -> list[tuple[int, ...]]:
        return [self.matrix.column(j) for j in range(self.p)]

    def cone_index(self) -> int:
        return self.labels.index(CONE_LABEL)

    def root_of_column(self, j: int) -> PositiveRoot | None:
        lab = self.labels[j]
        if lab == CONE_LABEL:
            return None
        ij = lab.split("|")[0].split(",")
        return PositiveRoot(int(ij[0]), int(ij[1]))

    def shift_of_column(self, j: int) -> int | None:
        lab = self.labels[j]
        if lab == CONE_LABEL:
            return None
        return int(lab.split("|")[1])


def _assemble(n: int, cols: list[list[int]], labels: list[str]) -> DeformationMatrix:
    cols.append([0] * n + [1])
    labels.append(CONE_LABEL)
    return DeformationMatrix(n, IntMatrix.from_columns(cols), tuple(labels))


def build_general(n: int, shift_sets) -> DeformationMatrix:
    """One shift set per positive root, in lexicographic root order."""
    roots = positive_roots(n)
    sets = [sorted(set(map(int, s))) for s in shift_sets]
    if len(sets) != len(roots):
        raise UsageError(f"need {len(roots)} shift sets for A_{n}, got {len(sets)}")
    if any(not s for s in sets):
        raise UsageError("every shift set must be nonempty")
    cols: list[list[int]] = []
    labels: list[str] = []
    for root, shifts in zip(roots, sets):
        vec = list(coefficient_vector(root, n))
        for x in shifts:
            cols.append(vec + [-x])
            labels.append(f"{root.i},{root.j}|{x}")
    return _assemble(n, cols, labels)


def build_uniform(n: int, l: int, m: int) -> DeformationMatrix:
    if l > m:
        raise HypothesisError(f"uniform deformation needs l <= m, got l={l} m={m}")
    shifts = list(range(l, m + 1))
    return build_general(n, [shifts] * (n * (n + 1) // 2))


def build_shi(n: int, m: int = 1) -> DeformationMatrix:
    if m < 1:
        raise HypothesisError("shi needs m >= 1")
    return build_uniform(n, 1 - m, m)


def build_catalan(n: int, m: int = 1) -> DeformationMatrix:
    if m < 1:
        raise HypothesisError("catalan needs m >= 1")
    return build_uniform(n, -m, m)


def build_linial(n: int, m: int = 1) -> DeformationMatrix:
    if m < 1:
        raise HypothesisError("linial needs m >= 1")
    return build_uniform(n, 1, m)


def build_ish(n: int) -> DeformationMatrix:
    """Shifted columns concentrate on first-row roots: (alpha_{1,j}, -x)
    for 2 <= j <= n+1 and 1 <= x <= j-1, after the unshifted copy of
    every root."""
    roots = positive_roots(n)
    cols: list[list[int]] = []
    labels: list[str] = []
    for root in roots:
        vec = list(coefficient_vector(root, n))
        cols.append(vec + [0])
        labels.append(f"{root.i},{root.j}|0")
        if root.i == 1:
            for x in range(1, root.j):
                cols.append(vec + [-x])
                labels.append(f"1,{root.j}|{x}")
    return _assemble(n, cols, labels)


def build_family(family: str, n: int, l: int | None = None, m: int | None = None) -> DeformationMatrix:
    family = family.lower()
    if family == "uniform":
        if l is None or m is None:
            raise UsageError("uniform family needs --l and --m")
        return build_uniform(n, l, m)
    if family == "shi":
        return build_shi(n, 1 if m is None else m)
    if family == "catalan":
        return build_catalan(n, 1 if m is None else m)
    if family == "linial":
        return build_linial(n, 1 if m is None else m)
    if family == "ish":
        return build_ish(n)
    raise UsageError(f"unknown family {family!r}, expected one of {', '.join(FAMILIES)}")


def decone(dm: DeformationMatrix) -> tuple[IntMatrix, tuple[int, ...]]:
    """Drop the cone column and the last row; return the root-part
    matrix together with the affine right-hand side (the shifts), so
    the non-central arrangement is z . c_j = b_j."""
    cone = dm.cone_index()
    keep = [j for j in range(dm.p) if j != cone]
    cols = []
    rhs = []
    for j in keep:
        col = dm.matrix.column(j)
        cols.append(col[:-1])
        rhs.append(-col[-1])
    return IntMatrix.from_columns(cols), tuple(rhs)


def to_json_object(dm: DeformationMatrix) -> dict:
    return {
        "n": dm.n,
        "p": dm.p,
        "rows": dm.matrix.rows,
        "entries": list(dm.matrix.entries),
        "labels": list(dm.labels),
    }


def to_csv(dm: DeformationMatrix) -> str:
    buf = io.StringIO()
    for i in range(dm.matrix.rows):
        buf.write(",".join(str(x) for x in dm.matrix.row(i)))
        buf.write("\n")
    return buf.getvalue()
