"""Exact linear algebra over the rationals.

Matrices are dense lists of :class:`fractions.Fraction` rows.  Elimination
skips zero entries, so the sparse differentials produced elsewhere in the
package stay cheap to reduce.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

Rational = Fraction

__all__ = [
    "Rational",
    "QMatrix",
    "to_rational",
    "rref",
    "rank",
    "nullspace",
    "column_space_basis",
    "solve",
    "left_inverse",
]


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: every computation in the package is exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rational entries")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if any(ch in text for ch in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"unsupported rational entry {value!r} ({type(value).__name__})")


class QMatrix:
    """An ``nrows x ncols`` matrix of Fractions.

    Treat instances as immutable; all operations return new matrices.
    """

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int = None):
        data = [[to_rational(x) for x in row] for row in rows]
        if ncols is None:
            if not data:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(data[0])
        for row in data:
            if len(row) != ncols:
                raise ValueError(f"row length {len(row)} != {ncols}")
        self.rows: List[List[Fraction]] = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _wrap(cls, rows: List[List[Fraction]], ncols: int) -> "QMatrix":
        # trusted constructor: rows already hold Fractions of the right length
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMatrix":
        z = Fraction(0)
        return cls._wrap([[z] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        m = cls.zeros(n, n)
        for i in range(n):
            m.rows[i][i] = Fraction(1)
        return m

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "QMatrix":
        cols = [[to_rational(x) for x in c] for c in columns]
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls._wrap(rows, len(cols))

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, QMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"QMatrix({self.nrows}x{self.ncols}: [{body}])"

    def tolist(self) -> List[List[Fraction]]:
        return [list(row) for row in self.rows]

    def column(self, j: int) -> List[Fraction]:
        return [row[j] for row in self.rows]

    def transpose(self) -> "QMatrix":
        return QMatrix._wrap([[row[j] for row in self.rows] for j in range(self.ncols)],
                             self.nrows)

    @property
    def T(self) -> "QMatrix":
        return self.transpose()

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __neg__(self):
        return QMatrix._wrap([[-x for x in row] for row in self.rows], self.ncols)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} + {other.shape}")
        return QMatrix._wrap([[a + b for a, b in zip(r, s)]
                              for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        return self + (-other)

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        zero = Fraction(0)
        out = []
        orows = other.rows
        for row in self.rows:
            acc = [zero] * other.ncols
            for k, a in enumerate(row):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
            out.append(acc)
        return QMatrix._wrap(out, other.ncols)

    def apply(self, vec: Sequence[Fraction]) -> List[Fraction]:
        """Matrix-vector product ``self @ vec`` on a plain list."""
        if len(vec) != self.ncols:
            raise ValueError(f"vector length {len(vec)} != {self.ncols}")
        nz = [(k, v) for k, v in enumerate(vec) if v]
        return [sum((row[k] * v for k, v in nz), Fraction(0)) for row in self.rows]

    def hstack(self, other: "QMatrix") -> "QMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch in hstack")
        return QMatrix._wrap([r + s for r, s in zip(self.rows, other.rows)],
                             self.ncols + other.ncols)

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch in vstack")
        return QMatrix._wrap([list(r) for r in self.rows] + [list(r) for r in other.rows],
                             self.ncols)

    def select_rows(self, idx: Sequence[int]) -> "QMatrix":
        return QMatrix._wrap([list(self.rows[i]) for i in idx], self.ncols)

    def select_columns(self, idx: Sequence[int]) -> "QMatrix":
        return QMatrix._wrap([[row[j] for j in idx] for row in self.rows], len(idx))


def _rref_rows(rows: List[List[Fraction]], ncols: int, stop: int = None):
    """In-place Gauss-Jordan elimination.

    Pivots are searched only in columns ``< stop`` (default: all).  The pivot
    row for a column is the first row, at or below the current one, with a
    nonzero entry there.
    """
    if stop is None:
        stop = ncols
    nrows = len(rows)
    pivots = []
    r = 0
    for c in range(stop):
        if r == nrows:
            break
        p = r
        while p < nrows and not rows[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        prow = rows[r]
        inv = 1 / prow[c]
        if inv != 1:
            prow = rows[r] = [x * inv if x else x for x in prow]
        support = [j for j in range(c, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                for j in support:
                    row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: QMatrix) -> Tuple[QMatrix, int, List[int]]:
    """Reduced row echelon form.

    Returns ``(R, rank, pivot_columns)``; ``R`` has the same shape as ``m``
    with zero rows at the bottom.
    """
    rows = [list(r) for r in m.rows]
    pivots = _rref_rows(rows, m.ncols)
    return QMatrix._wrap(rows, m.ncols), len(pivots), pivots


def rank(m: QMatrix) -> int:
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return rref(m)[1]


def nullspace(m: QMatrix) -> QMatrix:
    """Basis of ``{v : m v = 0}``, one vector per row.

    Each basis vector has a 1 at its free column and zeros at the other free
    columns, so the basis is canonical.
    """
    n = m.ncols
    if m.nrows == 0:
        return QMatrix.identity(n)
    r, k, pivots = rref(m)
    pivset = set(pivots)
    free = [j for j in range(n) if j not in pivset]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r.rows[i][f]
        basis.append(v)
    return QMatrix._wrap(basis, n)


def column_space_basis(m: QMatrix) -> QMatrix:
    """Independent columns of ``m`` spanning its image, returned as rows."""
    if m.nrows == 0 or m.ncols == 0:
        return QMatrix._wrap([], m.nrows)
    _, _, pivots = rref(m)
    return QMatrix._wrap([m.column(j) for j in pivots], m.nrows)


def solve(m: QMatrix, b: Sequence) -> List[Fraction]:
    """One solution ``x`` of ``m x = b`` (free variables set to zero).

    Raises ``ValueError`` when the system is inconsistent.
    """
    if len(b) != m.nrows:
        raise ValueError("right-hand side length mismatch")
    rows = [list(r) + [to_rational(x)] for r, x in zip(m.rows, b)]
    pivots = _rref_rows(rows, m.ncols + 1, stop=m.ncols)
    for row in rows[len(pivots):]:
        if row[-1]:
            raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * m.ncols
    for i, p in enumerate(pivots):
        x[p] = rows[i][-1]
    return x


def left_inverse(m: QMatrix) -> QMatrix:
    """``L`` with ``L @ m = I`` for a matrix of full column rank."""
    n, k = m.shape
    rows = [list(r) + [Fraction(int(i == j)) for j in range(n)]
            for i, r in enumerate(m.rows)]
    pivots = _rref_rows(rows, k + n, stop=k)
    if len(pivots) != k:
        raise ValueError("matrix does not have full column rank")
    return QMatrix._wrap([row[k:] for row in rows[:k]], n)
