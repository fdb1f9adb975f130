"""Exact rational scalars, vectors, matrices and sparse rank-3 tensors.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions. Everything here is immutable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Tuple, Union

from .errors import ParseError, ShapeError

Rational = Fraction
Vector = Tuple[Fraction, ...]
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text, where: str = "") -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` into a canonical fraction.

    JSON integers are accepted as well; floats and booleans are not.
    """
    if isinstance(text, bool):
        raise ParseError(f"expected rational string, got boolean", where)
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ParseError(f"malformed rational {text!r}", where)
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", where)
    return Fraction(int(num), int(den) if den else 1)


def format_rational(value: Scalar) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


# -- vectors -----------------------------------------------------------------

def vector(entries: Iterable[Scalar]) -> Vector:
    return tuple(Fraction(v) for v in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def _check_len(u: Sequence, v: Sequence) -> None:
    if len(u) != len(v):
        raise ShapeError(f"vector lengths differ: {len(u)} != {len(v)}")


def vec_add(u: Vector, v: Vector) -> Vector:
    _check_len(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vector, v: Vector) -> Vector:
    _check_len(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Scalar, u: Vector) -> Vector:
    if c == 0:
        return zero_vector(len(u))
    return tuple(c * a for a in u)


def pairing(u: Vector, v: Vector) -> Fraction:
    """Natural pairing of a covector with a vector in dual coordinates."""
    _check_len(u, v)
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def is_zero_vector(u: Iterable) -> bool:
    return not any(u)


def linear_combination(terms: Iterable[Tuple[Scalar, Vector]], n: int) -> Vector:
    acc = [ZERO] * n
    for c, u in terms:
        if not c:
            continue
        for k, a in enumerate(u):
            if a:
                acc[k] += c * a
    return tuple(acc)


# -- matrices ----------------------------------------------------------------

class Matrix:
    """Immutable dense matrix over the rationals.

    A matrix acts on column vectors, so ``(m @ v)[i] = sum_j m[i][j] v[j]``.
    The shape is stored explicitly so that 0 x 0 matrices are representable.
    """

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable[Scalar]], ncols: int | None = None):
        rows = tuple(tuple(Fraction(v) for v in row) for row in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != ncols:
                raise ShapeError(f"ragged matrix: row of length {len(r)}, expected {ncols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "nrows", len(rows))
        object.__setattr__(self, "ncols", ncols)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls((unit_vector(n, i) for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return cls(((ZERO,) * m for _ in range(n)), ncols=m)

    @classmethod
    def from_columns(cls, columns: Sequence[Vector], nrows: int) -> "Matrix":
        return cls(
            (tuple(col[i] for col in columns) for i in range(nrows)),
            ncols=len(columns),
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows), ncols=self.nrows) if self.nrows else Matrix.zeros(self.ncols, 0)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def __getitem__(self, ij: Tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.rows)

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def apply(self, v: Vector) -> Vector:
        if len(v) != self.ncols:
            raise ShapeError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        nz = [(j, a) for j, a in enumerate(v) if a]
        return tuple(sum((row[j] * a for j, a in nz if row[j]), ZERO) for row in self.rows)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return mat_mul(self, other)
        return self.apply(tuple(other))

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix((tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix((tuple(a - b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix((tuple(-a for a in r) for r in self.rows), self.ncols)

    def __mul__(self, c: Scalar) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        return Matrix((tuple(c * a for a in r) for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.shape, self.rows)))
        return self._hash

    def replace(self, i: int, j: int, value: Scalar) -> "Matrix":
        rows = [list(r) for r in self.rows]
        rows[i][j] = Fraction(value)
        return Matrix(rows, self.ncols)

    def __repr__(self) -> str:
        body = ", ".join("(" + ", ".join(format_rational(a) for a in r) + ")" for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a.ncols != b.nrows:
        raise ShapeError(f"cannot multiply {a.shape} by {b.shape}")
    bt = b.T.rows if b.nrows else ((),) * b.ncols
    rows = []
    for row in a.rows:
        nz = [(k, x) for k, x in enumerate(row) if x]
        rows.append(tuple(sum((x * col[k] for k, x in nz if col[k]), ZERO) for col in bt))
    return Matrix(rows, b.ncols)


def transpose(m: Matrix) -> Matrix:
    return m.T


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def matrix_sum(terms: Iterable[Tuple[Scalar, Matrix]], n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    acc = [[ZERO] * m for _ in range(n)]
    for c, mat in terms:
        if not c:
            continue
        for i, row in enumerate(mat.rows):
            for j, a in enumerate(row):
                if a:
                    acc[i][j] += c * a
    return Matrix(acc, m)


# -- rank-3 tensors ----------------------------------------------------------

Index3 = Tuple[int, int, int]


class Tensor3:
    """Sparse cubic tensor; entry (i, j, k) is the coefficient of e_k in e_i e_j."""

    __slots__ = ("dim", "_entries", "_rows")

    def __init__(self, dim: int, entries: Mapping[Index3, Scalar] | Iterable[Tuple[Index3, Scalar]] = ()):
        if dim < 0:
            raise ShapeError("tensor dimension must be non-negative")
        items = entries.items() if isinstance(entries, Mapping) else entries
        data = {}
        for (i, j, k), v in items:
            for idx in (i, j, k):
                if not 0 <= idx < dim:
                    raise ShapeError(f"index {(i, j, k)} out of range for dimension {dim}")
            v = Fraction(v)
            if v:
                data[(i, j, k)] = v
        self.dim = dim
        self._entries = data
        rows: dict = {}
        for (i, j, k), v in sorted(data.items()):
            rows.setdefault((i, j), {})[k] = v
        self._rows = rows

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Sequence[Scalar]]]) -> "Tensor3":
        n = len(dense)
        return cls(n, {
            (i, j, k): v
            for i, plane in enumerate(dense)
            for j, line in enumerate(plane)
            for k, v in enumerate(line)
            if v
        })

    def __getitem__(self, ijk: Index3) -> Fraction:
        return self._entries.get(tuple(ijk), ZERO)

    def row(self, i: int, j: int) -> Mapping[int, Fraction]:
        """Sparse coefficients of e_i e_j (do not mutate)."""
        return self._rows.get((i, j), {})

    def items(self):
        return sorted(self._entries.items())

    @property
    def nnz(self) -> int:
        return len(self._entries)

    def dense(self) -> Tuple[Tuple[Vector, ...], ...]:
        n = self.dim
        return tuple(
            tuple(tuple(self[i, j, k] for k in range(n)) for j in range(n))
            for i in range(n)
        )

    def replace(self, ijk: Index3, value: Scalar) -> "Tensor3":
        data = dict(self._entries)
        data[tuple(ijk)] = Fraction(value)
        return Tensor3(self.dim, data)

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor3) and self.dim == other.dim and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self._entries.items())))

    def __repr__(self) -> str:
        return f"Tensor3(dim={self.dim}, nnz={self.nnz})"
