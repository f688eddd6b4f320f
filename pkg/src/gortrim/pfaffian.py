"""Skew-symmetric polynomial matrices, pfaffians and the Buchsbaum-Eisenbud
resolution of the ideal of submaximal pfaffians.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .linalg import PolyMatrix
from .polyring import Poly, Ring


class ComplexError(ArithmeticError):
    """The resolution matrices fail to compose to zero."""


def theta(x: int) -> int:
    """Unit step: 0 for negative, 1 for positive arguments; undefined at 0."""
    if x == 0:
        raise ValueError("theta is undefined at 0")
    return 1 if x > 0 else 0


def _distinct(*idx):
    if len(set(idx)) != len(idx):
        raise ValueError(f"indices must be pairwise distinct, got {idx}")


def sigma3(i: int, j: int, r: int) -> int:
    _distinct(i, j, r)
    e = i + j + r + 1 + theta(r - i) + theta(r - j) + theta(j - i)
    return -1 if e % 2 else 1


def sigma5(i: int, j: int, r: int, h: int, k: int) -> int:
    _distinct(i, j, r, h, k)
    e = (
        h + k + 1
        + theta(k - i) + theta(k - j) + theta(k - r) + theta(k - h)
        + theta(h - i) + theta(h - j) + theta(h - r)
    )
    return -1 if e % 2 else 1


def _check_skew(M: PolyMatrix):
    if not M.is_square():
        raise ValueError(f"skew matrix must be square, got {M.nrows}x{M.ncols}")
    n = M.nrows
    for i in range(n):
        if M.rows[i][i]:
            raise ValueError(f"nonzero diagonal entry at ({i + 1},{i + 1})")
        for j in range(i + 1, n):
            if M.rows[j][i] != -M.rows[i][j]:
                raise ValueError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not negatives")


class SkewMatrix:
    """Odd-size skew-symmetric matrix with zero diagonal and entries in the
    maximal ideal (no constant terms)."""

    __slots__ = ("matrix", "_pf_memo")

    def __init__(self, matrix: PolyMatrix):
        _check_skew(matrix)
        m = matrix.nrows
        if m < 3 or m % 2 == 0:
            raise ValueError(f"presentation matrix must have odd size >= 3, got {m}")
        for i, row in enumerate(matrix.rows):
            for j, x in enumerate(row):
                if x.constant_term() != 0:
                    raise ValueError(f"entry ({i + 1},{j + 1}) = {x} has a nonzero constant term")
        self.matrix = matrix
        self._pf_memo = {}

    @classmethod
    def from_rows(cls, ring: Ring, rows) -> "SkewMatrix":
        return cls(PolyMatrix(ring, rows))

    @classmethod
    def from_upper(cls, ring: Ring, upper: dict, m: int) -> "SkewMatrix":
        """Build from ``{(i, j): entry}`` for i < j (1-based); the rest is implied."""
        rows = [[ring.zero] * m for _ in range(m)]
        for (i, j), v in upper.items():
            if not 1 <= i < j <= m:
                raise ValueError(f"upper-triangle key {(i, j)} invalid for size {m}")
            v = ring(v)
            rows[i - 1][j - 1] = v
            rows[j - 1][i - 1] = -v
        return cls(PolyMatrix(ring, rows))

    @property
    def ring(self) -> Ring:
        return self.matrix.ring

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def entry(self, i: int, j: int) -> Poly:
        return self.matrix.entry(i, j)

    def __eq__(self, other):
        if not isinstance(other, SkewMatrix):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return f"SkewMatrix({self.matrix!r})"


# -- pfaffians --------------------------------------------------------------


def _pf_indices(rows, idx: tuple, zero, one, memo: dict):
    # first-row expansion: pf = sum_{j>=2} (-1)^j T[1,j] pf(remove 1, j)
    if not idx:
        return one
    if idx in memo:
        return memo[idx]
    first, rest = idx[0], idx[1:]
    acc = zero
    for pos, j in enumerate(rest):
        a = rows[first][j]
        if not a:
            continue
        sub = _pf_indices(rows, rest[:pos] + rest[pos + 1 :], zero, one, memo)
        if not sub:
            continue
        # j sits at 1-based position pos + 2 of the current index list
        acc = acc - a * sub if pos % 2 else acc + a * sub
    memo[idx] = acc
    return acc


def pfaffian(M) -> Poly:
    """Pfaffian of an even-size skew-symmetric matrix, normalized so that
    ``pf([[0, a], [-a, 0]]) = a``; the empty matrix has pfaffian 1."""
    if isinstance(M, SkewMatrix):
        raise ValueError("pfaffian of an odd-size matrix is not defined; use sub_pfaffian")
    _check_skew(M)
    if M.nrows % 2:
        raise ValueError(f"pfaffian needs even size, got {M.nrows}")
    return _pf_indices(M.rows, tuple(range(M.nrows)), M.ring.zero, M.ring.one, {})


def sub_pfaffian(T, removed: Iterable[int]) -> Poly:
    """Pfaffian of the principal submatrix left after deleting ``removed``
    (1-based, any order)."""
    M = T.matrix if isinstance(T, SkewMatrix) else T
    if isinstance(T, PolyMatrix):
        _check_skew(T)
    n = M.nrows
    removed = sorted(removed)
    if len(set(removed)) != len(removed):
        raise ValueError(f"repeated index in {removed}")
    for i in removed:
        if not 1 <= i <= n:
            raise IndexError(f"index {i} outside 1..{n}")
    if (n - len(removed)) % 2:
        raise ValueError(f"removing {len(removed)} of {n} indices leaves an odd-size matrix")
    keep = tuple(i for i in range(n) if i + 1 not in removed)
    memo = T._pf_memo if isinstance(T, SkewMatrix) else {}
    return _pf_indices(M.rows, keep, M.ring.zero, M.ring.one, memo)


def pfaffians(T: SkewMatrix) -> list:
    """The submaximal pfaffians ``[pf_1(T), ..., pf_m(T)]``."""
    return [sub_pfaffian(T, [i]) for i in range(1, T.size + 1)]


# -- resolution and products ------------------------------------------------


@dataclass(frozen=True)
class ResolutionData:
    d1: PolyMatrix
    d2: PolyMatrix
    d3: PolyMatrix
    generators: tuple  # y_i = (-1)^(i+1) pf_i(T)


def generators(T: SkewMatrix) -> list:
    return [p if i % 2 == 0 else -p for i, p in enumerate(pfaffians(T))]


def resolution(T: SkewMatrix) -> ResolutionData:
    """``0 -> R -D3-> R^m -D2-> R^m -D1-> R`` with D2 = T, D1 the signed
    pfaffian row and D3 its transpose.  Raises :class:`ComplexError` if a
    composite is nonzero."""
    y = generators(T)
    d1 = PolyMatrix(T.ring, [y])
    d2 = T.matrix
    d3 = d1.transpose()
    if not (d1 @ d2).is_zero():
        raise ComplexError("D1*D2 != 0")
    if not (d2 @ d3).is_zero():
        raise ComplexError("D2*D3 != 0")
    return ResolutionData(d1, d2, d3, tuple(y))


@dataclass(frozen=True)
class ProductEE:
    """Coordinates of ``e_i * e_j`` in the basis f_1..f_m."""

    i: int
    j: int
    coefficients: tuple


def product_ee(T: SkewMatrix, i: int, j: int) -> ProductEE:
    m = T.size
    if not (1 <= i < j <= m):
        raise ValueError(f"product_ee needs 1 <= i < j <= {m}, got ({i}, {j})")
    coeffs = []
    for r in range(1, m + 1):
        if r in (i, j):
            coeffs.append(T.ring.zero)
        else:
            pf = sub_pfaffian(T, (i, j, r))
            coeffs.append(pf if sigma3(i, j, r) > 0 else -pf)
    return ProductEE(i, j, tuple(coeffs))


def product_ef(i: int, j: int) -> int:
    """Coefficient of g in ``e_i * f_j`` (the Kronecker pairing)."""
    return int(i == j)


def leibniz_defect(T: SkewMatrix, i: int, j: int) -> list:
    """``D2 * (e_i e_j) - (y_i e_j - y_j e_i)``; all zero for a DG product."""
    y = generators(T)
    prod = product_ee(T, i, j).coefficients
    out = []
    for a in range(T.size):
        acc = T.ring.zero
        for b, c in enumerate(prod):
            if c:
                acc = acc + T.matrix.rows[a][b] * c
        target = T.ring.zero
        if a == j - 1:
            target = target + y[i - 1]
        if a == i - 1:
            target = target - y[j - 1]
        out.append(acc - target)
    return out


def permute(T: SkewMatrix, images: Sequence[int]) -> SkewMatrix:
    """``P T P^-1`` where P sends basis vector b to ``images[b-1]``; that is,
    the entry at (a, b) moves to (images[a-1], images[b-1])."""
    m = T.size
    if sorted(images) != list(range(1, m + 1)):
        raise ValueError(f"{list(images)} is not a permutation of 1..{m}")
    inv = [0] * m
    for b, img in enumerate(images):
        inv[img - 1] = b
    rows = [[T.matrix.rows[inv[a]][inv[b]] for b in range(m)] for a in range(m)]
    return SkewMatrix(PolyMatrix(T.ring, rows))
