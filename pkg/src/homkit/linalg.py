"""Exact rational vectors, matrices, and Gaussian elimination.

Every entry is a :class:`fractions.Fraction`, so all arithmetic in the
package is exact; there is no tolerance anywhere.  Values are immutable
after construction and all operations are pure functions.

Conventions fixed once for the whole package:

* a linear map sends the j-th basis vector to column j of its matrix,
  ``f(e_j) = sum_i M[i][j] e_i``;
* composition ``(f o g)(x) = f(g(x))`` corresponds to the product ``F @ G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

from .errors import ShapeError

Rational = Union[Fraction, int, str]


def frac(value: Rational) -> Fraction:
    """Coerce an int, a string like ``"3/2"``, or a Fraction to a Fraction."""
    return value if isinstance(value, Fraction) else Fraction(value)


def rational_sqrt(value: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or None if irrational."""
    if value < 0:
        raise ValueError("square root of a negative rational")
    num, den = value.numerator, value.denominator
    sn, sd = isqrt(num), isqrt(den)
    if sn * sn == num and sd * sd == den:
        return Fraction(sn, sd)
    return None


class Vector:
    """Immutable vector with exact rational entries."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable[Rational]):
        object.__setattr__(self, "entries", tuple(frac(e) for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    @classmethod
    def zero(cls, dim: int) -> "Vector":
        return cls([Fraction(0)] * dim)

    @classmethod
    def unit(cls, dim: int, index: int) -> "Vector":
        if not 0 <= index < dim:
            raise ShapeError(f"unit index {index} out of range for dim {dim}")
        return cls([Fraction(1) if i == index else Fraction(0) for i in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def scale(self, c: Rational) -> "Vector":
        c = frac(c)
        return Vector(c * e for e in self.entries)

    def _check(self, other: "Vector") -> None:
        if self.dim != other.dim:
            raise ShapeError(f"vector dims differ: {self.dim} vs {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        return Vector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "Vector":
        return Vector(-e for e in self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"Vector({list(self.entries)!r})"


class Matrix:
    """Immutable rows x cols matrix with exact rational entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Iterable[Iterable[Rational]], rows: int | None = None,
                 cols: int | None = None):
        grid = tuple(tuple(frac(e) for e in row) for row in entries)
        if rows is None:
            rows = len(grid)
        if cols is None:
            cols = len(grid[0]) if grid else 0
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise ShapeError("ragged or mis-sized matrix data")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", grid)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_cols(cls, cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            return cls.zero(0, 0)
        dim = cols[0].dim
        if any(c.dim != dim for c in cols):
            raise ShapeError("columns of differing dimension")
        return cls([[c[i] for c in cols] for i in range(dim)], dim, len(cols))

    @classmethod
    def block(cls, grid: Sequence[Sequence["Matrix"]]) -> "Matrix":
        """Assemble a matrix from a grid of consistently sized blocks."""
        rows = []
        for block_row in grid:
            height = block_row[0].rows
            if any(b.rows != height for b in block_row):
                raise ShapeError("block row heights differ")
            for i in range(height):
                row: list[Fraction] = []
                for b in block_row:
                    row.extend(b.entries[i])
                rows.append(row)
        return cls(rows)

    @classmethod
    def block_diag(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        return cls.block([[a, cls.zero(a.rows, b.cols)],
                          [cls.zero(b.rows, a.cols), b]])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return Vector(self.entries[i])

    def col(self, j: int) -> Vector:
        return Vector(row[j] for row in self.entries)

    def is_zero(self) -> bool:
        return all(e == 0 for row in self.entries for e in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.entries), self.cols, self.rows) if self.entries \
            else Matrix.zero(self.cols, self.rows)

    def scale(self, c: Rational) -> "Matrix":
        c = frac(c)
        return Matrix((c * e for e in row) for row in self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("matrix shapes differ in addition")
        return Matrix((a + b for a, b in zip(r1, r2))
                      for r1, r2 in zip(self.entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(-1)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by "
                             f"{other.rows}x{other.cols}")
        ot = other.transpose().entries
        return Matrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in ot]
             for row in self.entries],
            self.rows, other.cols)

    def apply(self, v: Vector) -> Vector:
        if self.cols != v.dim:
            raise ShapeError(f"cannot apply {self.rows}x{self.cols} to dim-{v.dim}")
        return Vector(sum((a * b for a, b in zip(row, v.entries)), Fraction(0))
                      for row in self.entries)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Matrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({[list(r) for r in self.entries]!r})"


@dataclass(frozen=True)
class AffineSolution:
    """Solution set of a consistent linear system: particular + kernel span."""

    particular: Vector
    kernel: tuple[Vector, ...]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    """Exact matrix product."""
    return a @ b


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form; pivot is the first nonzero entry
    of each column.  Returns the reduced rows and the pivot columns."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _kernel_from_rref(rows: list[list[Fraction]], pivots: list[int],
                      ncols: int) -> list[Vector]:
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(Vector(v))
    return basis


def kernel_basis(a: Matrix) -> list[Vector]:
    """Basis of the null space of ``a``; empty iff ``a`` is injective."""
    if a.cols == 0:
        return []
    if a.rows == 0:
        return [Vector.unit(a.cols, j) for j in range(a.cols)]
    rows, pivots = _rref([list(r) for r in a.entries])
    return _kernel_from_rref(rows, pivots, a.cols)


def solve_linear(a: Matrix, b: Vector) -> AffineSolution | None:
    """Solve ``a x = b`` exactly.

    Returns None iff the system is inconsistent, otherwise a particular
    solution together with a kernel basis describing all solutions.
    """
    if a.rows != b.dim:
        raise ShapeError(f"matrix has {a.rows} rows but rhs has dim {b.dim}")
    if a.cols == 0:
        if b.is_zero():
            return AffineSolution(Vector.zero(0), ())
        return None
    if a.rows == 0:
        return AffineSolution(Vector.zero(a.cols),
                              tuple(Vector.unit(a.cols, j) for j in range(a.cols)))
    aug = [list(r) + [be] for r, be in zip(a.entries, b.entries)]
    rows, pivots = _rref(aug)
    if a.cols in pivots:
        return None
    particular = [Fraction(0)] * a.cols
    for r, p in enumerate(pivots):
        particular[p] = rows[r][a.cols]
    plain = [row[:a.cols] for row in rows]
    kernel = _kernel_from_rref(plain, pivots, a.cols)
    return AffineSolution(Vector(particular), tuple(kernel))


def in_span(columns: Sequence[Vector], v: Vector) -> bool:
    """Membership test: is ``v`` in the span of the given vectors?"""
    if not columns:
        return v.is_zero()
    return solve_linear(Matrix.from_cols(list(columns)), v) is not None


def format_coeff(c: Fraction) -> str:
    return str(c)


def format_lincomb(v: Vector, symbol: str = "e") -> str:
    """Render a vector as a linear combination such as ``3/2 e1 - e2``."""
    parts: list[str] = []
    for i, c in enumerate(v.entries):
        if c == 0:
            continue
        name = f"{symbol}{i + 1}"
        mag = abs(c)
        body = name if mag == 1 else f"{format_coeff(mag)} {name}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"
