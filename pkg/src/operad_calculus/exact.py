"""Exact rational scalars, dense rational matrices and rank computations.

Scalars are :class:`fractions.Fraction` (aliased as :data:`Rational`); plain
``int`` values are accepted anywhere a scalar is expected, since they compare
and combine exactly with fractions.

Coefficient tensors are numpy arrays of ``dtype=object`` so that every entry
stays an arbitrary-precision integer or fraction.  The flattening order is the
C (row-major) order of the tensor, which for a multilinear map stored with the
output axis first gives ``index = j*d**n + sum_k i_k * d**(n-k)``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+\-−]?)(\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or ``"-p/q"`` into a reduced fraction.

    The unicode minus sign is accepted as well.  A zero denominator raises
    :class:`ParseError`.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ParseError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"not a rational: {text!r}")
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ParseError(f"not a rational: {text!r}")
    sign, num, den = match.groups()
    denominator = int(den) if den is not None else 1
    if denominator == 0:
        raise ParseError(f"zero denominator in {text!r}")
    value = Fraction(int(num), denominator)
    return -value if sign in ("-", "−") else value


def format_rational(value: int | Fraction) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def normalize(value: int | Fraction) -> Fraction:
    return Fraction(value)


def as_object_array(values, shape: tuple[int, ...] | None = None) -> np.ndarray:
    """Copy *values* into an object array of exact scalars.

    Integral Fractions are stored as ``int``; Python integer arithmetic is
    much faster and compares equal to the Fraction it replaces.
    """
    arr = np.empty(np.shape(values), dtype=object)
    flat = arr.reshape(-1)
    for k, v in enumerate(np.asarray(values, dtype=object).reshape(-1)):
        if isinstance(v, (np.integer,)):
            v = int(v)
        elif isinstance(v, Fraction) and v.denominator == 1:
            v = v.numerator
        elif isinstance(v, float):
            raise TypeError("floating point values are not allowed")
        flat[k] = v
    if shape is not None:
        arr = arr.reshape(shape)
    return arr


def zeros(shape: tuple[int, ...]) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.fill(0)
    return arr


def flatten(data) -> list:
    """Coordinates of a coefficient tensor (or Element) in C order."""
    if hasattr(data, "data") and not isinstance(data, np.ndarray):
        data = data.data
    return list(np.asarray(data, dtype=object).reshape(-1))


def unflatten(values: Sequence, shape: tuple[int, ...]) -> np.ndarray:
    values = list(values)
    if len(values) != math.prod(shape):
        raise ValueError(f"expected {math.prod(shape)} coordinates, got {len(values)}")
    return as_object_array(values, shape)


@dataclass(frozen=True)
class RatMatrix:
    """Dense rational matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length must equal rows * cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RatMatrix":
        rows = [list(r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, tuple(Fraction(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "RatMatrix":
        cols = len(columns)
        entries = [Fraction(0)] * (rows * cols)
        for j, column in enumerate(columns):
            if len(column) != rows:
                raise ValueError("column length mismatch")
            for i, x in enumerate(column):
                entries[i * cols + j] = Fraction(x)
        return cls(rows, cols, tuple(entries))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def to_rows(self) -> list[list[Fraction]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def array(self) -> np.ndarray:
        return as_object_array(list(self.entries), (self.rows, self.cols))

    def transpose(self) -> "RatMatrix":
        return RatMatrix.from_rows(
            [[self.entries[i * self.cols + j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return RatMatrix.zero(self.rows, other.cols)
        prod = self.array().dot(other.array())
        return RatMatrix(self.rows, other.cols, tuple(Fraction(x) for x in prod.reshape(-1)))

    def __neg__(self) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(-x for x in self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    """Scale every row by the lcm of its denominators (rank is unchanged)."""
    out = []
    for row in m.to_rows():
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // math.gcd(lcm, x.denominator)
        out.append([int(x * lcm) for x in row])
    return out


def matrix_rank(m: RatMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    a = [row for row in _integer_rows(m) if any(row)]
    if not a:
        return 0
    nrows, ncols = len(a), m.cols
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nrows):
            row = a[r]
            factor = row[col]
            # Every entry stays a minor of the input, so the division is exact.
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - factor * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def kernel_dim(m: RatMatrix) -> int:
    return m.cols - matrix_rank(m)


def rref(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and its pivot columns."""
    a = m.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a[:r], pivots


def nullspace(m: RatMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Basis of the kernel of *m* together with the free columns.

    Basis vector ``k`` has a one at free column ``free[k]`` and zeros at the
    other free columns, so the coordinates of any kernel vector in this basis
    are simply its entries at the free columns.
    """
    rows, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for row, pc in zip(rows, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis, free


def column_space_rank(columns: Iterable[Sequence], rows: int) -> int:
    return matrix_rank(RatMatrix.from_columns(list(columns), rows))
