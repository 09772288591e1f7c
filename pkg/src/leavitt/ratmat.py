"""Small dense matrices over exact rationals.

Shapes are carried explicitly so that 0-row and 0-column matrices (which occur
whenever a vertex carries a zero-dimensional space) behave correctly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class RatMat:
    rows: int
    cols: int
    data: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise DomainError("matrix data does not match its declared shape")

    @staticmethod
    def from_rows(rows, cols: int | None = None) -> "RatMat":
        data = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if cols is None:
            cols = len(data[0]) if data else 0
        return RatMat(len(data), cols, data)

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.cols != other.rows:
            raise DomainError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        ot = tuple(zip(*other.data)) if other.data else ((),) * other.cols
        data = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in ot) for row in self.data
        )
        return RatMat(self.rows, other.cols, data)

    def __add__(self, other: "RatMat") -> "RatMat":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DomainError("shape mismatch in matrix addition")
        data = tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)
        )
        return RatMat(self.rows, self.cols, data)

    def transpose(self) -> "RatMat":
        data = tuple(zip(*self.data)) if self.data else ((),) * self.cols
        return RatMat(self.cols, self.rows, tuple(tuple(r) for r in data))

    def col_block(self, start: int, stop: int) -> "RatMat":
        return RatMat(self.rows, stop - start, tuple(r[start:stop] for r in self.data))

    def row_block(self, start: int, stop: int) -> "RatMat":
        return RatMat(stop - start, self.cols, self.data[start:stop])


def zeros(rows: int, cols: int) -> RatMat:
    return RatMat(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))


def identity(n: int) -> RatMat:
    return RatMat(
        n, n, tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
    )


def inverse(m: RatMat) -> RatMat:
    """Gauss-Jordan inverse; raises DomainError on non-square or singular input."""
    if m.rows != m.cols:
        raise DomainError("only square matrices can be inverted")
    n = m.rows
    work = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(m.data)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise DomainError("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return RatMat.from_rows([row[n:] for row in work], cols=n)


def rank_of_rows(rows) -> int:
    """Rank over the rationals of an iterable of equal-length rows."""
    work = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    ncols = len(work[0]) if work else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(work)) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] != 0:
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[rank])]
        rank += 1
    return rank


def in_row_span(rows, vec) -> bool:
    rows = [tuple(r) for r in rows]
    return rank_of_rows(rows) == rank_of_rows(rows + [tuple(vec)])


def random_invertible(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> RatMat:
    """Random invertible integer matrix (entries in [lo, hi]), retried until nonsingular."""
    if n == 0:
        return identity(0)
    while True:
        rows = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)]
        m = RatMat.from_rows(rows)
        if rank_of_rows(m.data) == n:
            return m
