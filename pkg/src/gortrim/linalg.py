"""Dense exact matrices over a coefficient field or a polynomial ring.

All public row/column indices are 1-based.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Optional, Sequence

from .polyring import Domain, Poly, Ring


class _Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols: Optional[int] = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def entry(self, i: int, j: int):
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"entry ({i},{j}) outside {self.nrows}x{self.ncols}")
        return self.rows[i - 1][j - 1]

    def column(self, j: int) -> tuple:
        return tuple(r[j - 1] for r in self.rows)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._base() == other._base() and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self._base(), self.shape, self.rows))

    def _new(self, rows, ncols=None):
        return type(self)(self._base(), rows, ncols=ncols)

    def transpose(self):
        return self._new(zip(*self.rows) if self.nrows else (), ncols=self.nrows)

    @property
    def T(self):
        return self.transpose()

    def tolist(self) -> list:
        return [list(r) for r in self.rows]


class FieldMatrix(_Matrix):
    """Matrix over a coefficient field (or ZZ)."""

    __slots__ = ("field",)

    def __init__(self, field: Domain, rows: Iterable[Sequence], ncols: Optional[int] = None):
        self.field = field
        super().__init__(([field(x) for x in r] for r in rows), ncols)

    def _base(self):
        return self.field

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, field, n):
        return cls(field, [[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.transpose().rows
        return FieldMatrix(
            self.field,
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows],
            ncols=other.ncols,
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"FieldMatrix({self.field.name}, {self.nrows}x{self.ncols}: [{body}])"


class PolyMatrix(_Matrix):
    """Matrix of polynomials over one shared ring."""

    __slots__ = ("ring",)

    def __init__(self, ring: Ring, rows: Iterable[Sequence], ncols: Optional[int] = None):
        self.ring = ring
        super().__init__(([ring(x) for x in r] for r in rows), ncols)

    def _base(self):
        return self.ring

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], ncols=ncols)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.transpose().rows
        zero = self.ring.zero
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out, ncols=other.ncols)

    def is_zero(self) -> bool:
        return all(not x for r in self.rows for x in r)

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[fn(x) for x in r] for r in self.rows], ncols=self.ncols)

    def evaluate(self, point, field=None) -> FieldMatrix:
        f = field or self.ring.field
        return FieldMatrix(f, [[x.evaluate(point, f) for x in r] for r in self.rows], ncols=self.ncols)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"PolyMatrix({self.ring!r}, {self.nrows}x{self.ncols}: [{body}])"


# -- selection --------------------------------------------------------------


def _check_indices(idx, bound, what):
    idx = list(idx)
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated {what} index in {idx}")
    for i in idx:
        if not 1 <= i <= bound:
            raise IndexError(f"{what} index {i} outside 1..{bound}")
    return idx


def submatrix(M, rows=None, cols=None, *, remove_rows=(), remove_cols=()):
    """Select rows/columns of ``M`` (1-based), kept in ascending original order.

    ``rows``/``cols`` name the indices to keep (default: all);
    ``remove_rows``/``remove_cols`` name indices to drop.
    """
    keep_r = _check_indices(range(1, M.nrows + 1) if rows is None else rows, M.nrows, "row")
    keep_c = _check_indices(range(1, M.ncols + 1) if cols is None else cols, M.ncols, "column")
    drop_r = set(_check_indices(remove_rows, M.nrows, "row"))
    drop_c = set(_check_indices(remove_cols, M.ncols, "column"))
    keep_r = sorted(i for i in keep_r if i not in drop_r)
    keep_c = sorted(j for j in keep_c if j not in drop_c)
    return M._new([[M.rows[i - 1][j - 1] for j in keep_c] for i in keep_r], ncols=len(keep_c))


# -- field linear algebra ---------------------------------------------------


def rref(M: FieldMatrix):
    """Reduced row echelon form and the 1-based pivot columns."""
    f = M.field
    if not f.is_field:
        raise ValueError(f"rref needs a field, got {f.name}")
    A = [list(r) for r in M.rows]
    pivots = []
    lead = 0
    for col in range(M.ncols):
        piv = next((r for r in range(lead, M.nrows) if A[r][col] != 0), None)
        if piv is None:
            continue
        A[lead], A[piv] = A[piv], A[lead]
        inv = f.inv(A[lead][col])
        A[lead] = [f(x * inv) for x in A[lead]]
        for r in range(M.nrows):
            if r != lead and A[r][col] != 0:
                c = A[r][col]
                A[r] = [f(x - c * y) for x, y in zip(A[r], A[lead])]
        pivots.append(col + 1)
        lead += 1
        if lead == M.nrows:
            break
    return FieldMatrix(f, A, ncols=M.ncols), pivots


def rank(M: FieldMatrix) -> int:
    return len(rref(M)[1])


def det(M: FieldMatrix):
    """Determinant over a field by Gaussian elimination."""
    if not M.is_square():
        raise ValueError(f"determinant of a non-square {M.nrows}x{M.ncols} matrix")
    f = M.field
    if not f.is_field:
        return det_poly_like(M.rows, f(0), f(1), lambda a, b: a * b)
    A = [list(r) for r in M.rows]
    n = M.nrows
    result = f(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return f(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            result = f(-result)
        p = A[col][col]
        result = f(result * p)
        inv = f.inv(p)
        for r in range(col + 1, n):
            if A[r][col] != 0:
                c = f(A[r][col] * inv)
                A[r] = [f(x - c * y) for x, y in zip(A[r], A[col])]
    return result


# -- determinants over a commutative ring -----------------------------------


def det_poly_like(rows, zero, one, mul=None):
    """Laplace expansion along rows, memoized on the set of remaining columns.

    Works over any commutative ring; uses only +, - and *.
    """
    n = len(rows)
    if n == 0:
        return one
    memo = {}

    def minor(r, cols):
        # determinant of rows r.. restricted to the column tuple ``cols``
        if r == n:
            return one
        key = cols
        if key in memo:
            return memo[key]
        acc = zero
        for pos, c in enumerate(cols):
            a = rows[r][c]
            if not a:
                continue
            sub = minor(r + 1, cols[:pos] + cols[pos + 1 :])
            if not sub:
                continue
            term = a * sub
            acc = acc - term if pos % 2 else acc + term
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def _det_cofactor(M: PolyMatrix) -> Poly:
    return det_poly_like(M.rows, M.ring.zero, M.ring.one)


def _det_bareiss(M: PolyMatrix) -> Poly:
    n = M.nrows
    A = [list(r) for r in M.rows]
    sign = 1
    prev = M.ring.one
    for k in range(n - 1):
        if not A[k][k]:
            swap = next((r for r in range(k + 1, n) if A[r][k]), None)
            if swap is None:
                return M.ring.zero
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = A[i][j] * A[k][k] - A[i][k] * A[k][j]
                A[i][j] = num.exact_div(prev)
        prev = A[k][k]
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def det_poly(M: PolyMatrix, method: str = "auto") -> Poly:
    """Determinant of a square polynomial matrix.

    ``method`` is ``"cofactor"``, ``"bareiss"`` or ``"auto"`` (cofactor up to
    4x4 and for non-field coefficients, Bareiss above).
    """
    if not M.is_square():
        raise ValueError(f"determinant of a non-square {M.nrows}x{M.ncols} matrix")
    if M.nrows == 0:
        return M.ring.one
    if method == "auto":
        method = "cofactor" if M.nrows <= 4 or not M.ring.field.is_field else "bareiss"
    if method == "cofactor":
        return _det_cofactor(M)
    if method == "bareiss":
        return _det_bareiss(M)
    raise ValueError(f"unknown determinant method {method!r}")


def minors(M, k: int, rows=None, cols=None):
    """Yield ``(row_idx, col_idx, det)`` for every k x k minor (1-based indices)."""
    row_pool = range(1, M.nrows + 1) if rows is None else rows
    col_pool = range(1, M.ncols + 1) if cols is None else cols
    det_fn = det_poly if isinstance(M, PolyMatrix) else det
    for ri in combinations(row_pool, k):
        for ci in combinations(col_pool, k):
            yield ri, ci, det_fn(submatrix(M, ri, ci))
