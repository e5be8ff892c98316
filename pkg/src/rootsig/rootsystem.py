"""Type-A root system model.

Positive roots of A_n are the vectors e_i - e_j for 1 <= i < j <= n+1.
In simple-root coordinates such a root is the 0/1 vector with ones in
positions i..j-1 (consecutive), so coefficient matrices here are
interval matrices.  A root doubles as the edge {i,j} of the complete
graph on [n+1]; that identification drives the fast signature path.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import UsageError
from .exactlinalg import IntMatrix


class PositiveRoot(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class RootTuple:
    """Ordered tuple of positive roots of A_n; duplicates permitted."""

    n: int
    roots: tuple[PositiveRoot, ...]

    def __post_init__(self):
        if self.n < 1:
            raise UsageError("rank n must be at least 1")
        for r in self.roots:
            if not (1 <= r.i < r.j <= self.n + 1):
                raise UsageError(f"root ({r.i},{r.j}) is not a positive root of A_{self.n}")

    def __len__(self):
        return len(self.roots)


@dataclass(frozen=True)
class RootGraph:
    """Multigraph on [vertex_count]; edges is a sorted tuple, one entry
    per tuple member, so multiplicities survive."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]


def positive_roots(n: int) -> list[PositiveRoot]:
    """All n(n+1)/2 positive roots of A_n in lexicographic (i,j) order."""
    if n < 1:
        raise UsageError("rank n must be at least 1")
    return [PositiveRoot(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 2)]


def root_tuple(n: int, pairs: Iterable[tuple[int, int]]) -> RootTuple:
    return RootTuple(n, tuple(PositiveRoot(int(i), int(j)) for i, j in pairs))


def coefficient_vector(root: PositiveRoot, n: int) -> tuple[int, ...]:
    """Simple-root coordinates of alpha_{i,j}: ones in rows i..j-1."""
    return tuple(1 if root.i <= k < root.j else 0 for k in range(1, n + 1))


def coefficient_matrix(s: RootTuple) -> IntMatrix:
    """The n x len(s) matrix whose columns are the tuple's roots."""
    return IntMatrix.from_columns([coefficient_vector(r, s.n) for r in s.roots])


def to_graph(s: RootTuple) -> RootGraph:
    edges = tuple(sorted((r.i, r.j) for r in s.roots))
    return RootGraph(s.n + 1, edges)


def serialize_root_tuple(s: RootTuple) -> str:
    return ";".join(f"{r.i},{r.j}" for r in s.roots)


def parse_root_tuple(text: str, n: int) -> RootTuple:
    """Parse "1,2;2,3;1,4" into a RootTuple of A_n."""
    pairs = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        bits = part.split(",")
        if len(bits) != 2:
            raise UsageError(f"malformed root {part!r}, expected i,j")
        try:
            pairs.append((int(bits[0]), int(bits[1])))
        except ValueError as exc:
            raise UsageError(f"malformed root {part!r}: {exc}") from None
    if not pairs:
        raise UsageError("empty root tuple")
    return root_tuple(n, pairs)
