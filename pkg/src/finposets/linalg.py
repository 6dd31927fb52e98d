"""Exact rational matrices with row reduction and rank.

Entries are :class:`fractions.Fraction`; no floating point anywhere.
``rref`` is deterministic (first nonzero pivot in column order) so the
reduced form can serve as a canonical fingerprint of a row space.
``rank`` runs a sparse forward elimination, which keeps the large but
very sparse boundary matrices of order complexes cheap; both routes
must agree and the tests hold them to that.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeMismatch

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _to_fraction(value) -> Fraction:
    return value if isinstance(value, Fraction) else Fraction(value)


class RationalMatrix:
    """An immutable rectangular matrix over the rationals."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        normalized = tuple(tuple(_to_fraction(v) for v in row) for row in rows)
        if normalized:
            width = len(normalized[0])
            if any(len(row) != width for row in normalized):
                raise ShapeMismatch("rows of unequal length")
            if ncols is not None and ncols != width:
                raise ShapeMismatch(f"expected {ncols} columns, rows have {width}")
            ncols = width
        elif ncols is None:
            ncols = 0
        self.rows = normalized
        self.ncols = ncols

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(
            tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self) -> int:
        return hash((self.rows, self.ncols))

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols})"

    def __str__(self) -> str:
        return ";".join(",".join(str(v) for v in row) for row in self.rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(zip(*self.rows) if self.rows else (), ncols=self.nrows)

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.ncols:
            raise ShapeMismatch("stacked matrices must share a column count")
        return RationalMatrix(self.rows + other.rows, ncols=self.ncols)

    def with_column(self, column: Sequence) -> "RationalMatrix":
        if len(column) != self.nrows:
            raise ShapeMismatch("column length must equal the row count")
        rows = tuple(row + (_to_fraction(v),) for row, v in zip(self.rows, column))
        return RationalMatrix(rows, ncols=self.ncols + 1)

    def rref(self) -> tuple["RationalMatrix", int, tuple[int, ...]]:
        """Reduced row echelon form, its rank, and the pivot columns."""
        rows = [list(row) for row in self.rows]
        nrows, ncols = len(rows), self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
            if pivot_row is None:
                continue
            rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
            inv = 1 / rows[r][c]
            rows[r] = [v * inv for v in rows[r]]
            for i in range(nrows):
                factor = rows[i][c]
                if i != r and factor:
                    target = rows[i]
                    source = rows[r]
                    rows[i] = [tv - factor * sv for tv, sv in zip(target, source)]
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        return RationalMatrix(rows, ncols=ncols), r, tuple(pivots)

    def rank(self) -> int:
        """Rank over the rationals via sparse forward elimination."""
        pivot_rows: dict[int, dict[int, Fraction]] = {}
        rank = 0
        for raw in self.rows:
            row = {j: v for j, v in enumerate(raw) if v}
            while row:
                c = min(row)
                pivot = pivot_rows.get(c)
                if pivot is None:
                    pivot_rows[c] = row
                    rank += 1
                    break
                factor = row[c] / pivot[c]
                for j, v in pivot.items():
                    updated = row.get(j, _ZERO) - factor * v
                    if updated:
                        row[j] = updated
                    else:
                        row.pop(j, None)
        return rank


def is_consistent(a: RationalMatrix, b: Sequence) -> bool:
    """Whether the linear system a * x = b has a solution."""
    return a.rank() == a.with_column(b).rank()
