"""Tor-algebra class of a trimmed five-generated grade 3 Gorenstein ideal.

Everything here works with residues modulo the maximal ideal: the linear
parts ``cbar[i, j, l]`` of the presentation matrix determine the matrix
``Qbar``, the G-trimming condition, the invariant ``p(T, t)`` and the
degree-one product coefficients.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .linalg import FieldMatrix, det, rref
from .pfaffian import SkewMatrix, permute, pfaffians, sigma3, sigma5

log = logging.getLogger(__name__)

PAIRS = ((1, 2), (1, 3), (2, 3))


class ClassificationError(ValueError):
    """The invariants fall outside the class tables (hypotheses violated)."""


# -- residues of the linear parts -------------------------------------------


class CBar:
    """``cbar(i, j, l)``: coefficient of z_l in ``T[j, i]``, over the residue field."""

    def __init__(self, field, values: dict, m: int = 5):
        self.field = field
        self.m = m
        self._v = values

    def __call__(self, i: int, j: int, l: int):
        return self._v.get((i, j, l), self.field(0))

    def column(self, i: int, k: int) -> tuple:
        """``(cbar(i,k,1), cbar(i,k,2), cbar(i,k,3))``."""
        return tuple(self(i, k, l) for l in (1, 2, 3))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self._v.values())

    def __eq__(self, other):
        if not isinstance(other, CBar):
            return NotImplemented
        keys = set(self._v) | set(other._v)
        return self.field == other.field and all(self(*k) == other(*k) for k in keys)


def build_cbar(T: SkewMatrix) -> CBar:
    if T.size != 5:
        raise ValueError(f"classification requires m=5, got m={T.size}")
    if T.ring.nvars != 3:
        raise ValueError(f"classification requires 3 variables, got {T.ring.nvars}")
    f = T.ring.field
    vals = {}
    for i in range(1, 6):
        for j in range(1, 6):
            if i == j:
                continue
            entry = T.entry(j, i)
            for l in (1, 2, 3):
                c = entry.linear_coefficient(l)
                if c != 0:
                    vals[(i, j, l)] = c
    return CBar(f, vals)


# -- Qbar -------------------------------------------------------------------


@dataclass(frozen=True)
class QBar:
    t: int
    matrix: FieldMatrix


def _check_t(t):
    if not 1 <= t <= 5:
        raise ValueError(f"trim count t must be in 1..5, got {t}")


def build_qbar(c: CBar, t: int) -> QBar:
    """The 3t x 5 matrix; block k, row l, column i holds ``cbar(i, k, l)``."""
    _check_t(t)
    rows = [[c(i, k, l) for i in range(1, 6)] for k in range(1, t + 1) for l in (1, 2, 3)]
    return QBar(t, FieldMatrix(c.field, rows, ncols=5))


def p_invariant(q: QBar) -> int:
    """Number of pivot columns of Qbar among the last 5 - t columns."""
    return sum(1 for col in rref(q.matrix)[1] if col > q.t)


def _complement(*idx) -> list:
    return [a for a in range(1, 6) if a not in idx]


def _minor2(a, b, x, y):
    return a * y - b * x


def g_trimming_condition(c: CBar, t: int) -> bool:
    """True when every listed 2x2 minor of ``[cbar(h,k,.) | cbar(r,k,.)]``
    vanishes; vacuous for t = 4, 5."""
    _check_t(t)
    f = c.field
    for k in range(1, t + 1):
        for i, j in combinations(range(t + 1, 6), 2):
            h, r = _complement(k, i, j)
            ch, cr = c.column(h, k), c.column(r, k)
            for a, b in PAIRS:
                if f(_minor2(ch[a - 1], cr[a - 1], ch[b - 1], cr[b - 1])) != 0:
                    return False
    return True


# -- degree-one products ----------------------------------------------------


def d_coefficient(c: CBar, k, i, j, alpha, beta, order: Optional[Sequence[int]] = None):
    """Residue of the coefficient of ``v^k_{alpha,beta}`` in ``e_i * e_j``.

    ``order`` fixes which complement index plays r and which plays h
    (default: ascending); the value does not depend on it.
    """
    r, h = order if order is not None else _complement(k, i, j)
    if {r, h} != set(_complement(k, i, j)):
        raise ValueError(f"{(r, h)} is not the complement of {(k, i, j)}")
    f = c.field
    ch, cr = c.column(h, k), c.column(r, k)
    m = _minor2(ch[alpha - 1], cr[alpha - 1], ch[beta - 1], cr[beta - 1])
    return f(sigma3(i, j, r) * sigma5(i, j, r, h, k) * m)


@dataclass(frozen=True)
class ProductAMatrix:
    t: int
    matrix: FieldMatrix
    row_labels: tuple  # (k, (alpha, beta))
    col_labels: tuple  # (i, j)


def product_a_matrix(c: CBar, t: int) -> ProductAMatrix:
    """Rows ``(k, v^k_{ab})``, columns ``e_i e_j`` for t < i < j <= 5."""
    _check_t(t)
    row_labels = tuple((k, ab) for k in range(1, t + 1) for ab in PAIRS)
    col_labels = tuple(combinations(range(t + 1, 6), 2)) if t <= 3 else ()
    rows = [[d_coefficient(c, k, i, j, a, b) for (i, j) in col_labels] for k, (a, b) in row_labels]
    return ProductAMatrix(t, FieldMatrix(c.field, rows, ncols=len(col_labels)), row_labels, col_labels)


def product_e_determinants(c: CBar, t: int) -> dict:
    """``{(i, j): coefficient of w^j in e_i * f_j}`` for t < i <= 5, 1 <= j <= t.

    ``{r, h, s}`` is the complement of ``{i, j}`` in ascending order.
    """
    _check_t(t)
    f = c.field
    out = {}
    for i in range(t + 1, 6):
        for j in range(1, t + 1):
            r, h, s = _complement(i, j)
            cols = [c.column(h, j), c.column(s, j), c.column(r, j)]
            M = FieldMatrix(f, [[col[l] for col in cols] for l in range(3)])
            out[(i, j)] = f(sigma3(i, r, h) * sigma5(i, r, h, s, j) * det(M))
    return out


# -- classes ----------------------------------------------------------------


@dataclass(frozen=True)
class TorClass:
    """One of C(3), T, B, G(r), H(p,q).  ``G`` with ``r=None`` means the
    parameter is not determined.  H(0,0) and H(0,1) are stored as G(0), G(1)."""

    tag: str
    r: Optional[int] = None
    p: Optional[int] = None
    q: Optional[int] = None

    def __post_init__(self):
        if self.tag not in ("C3", "T", "B", "G", "H"):
            raise ValueError(f"unknown class tag {self.tag!r}")
        if self.tag == "H":
            if self.p is None or self.q is None:
                raise ValueError("class H needs (p, q)")
            if self.p == 0 and self.q in (0, 1):
                object.__setattr__(self, "tag", "G")
                object.__setattr__(self, "r", self.q)
                object.__setattr__(self, "p", None)
                object.__setattr__(self, "q", None)

    @classmethod
    def H(cls, p: int, q: int) -> "TorClass":
        return cls("H", p=p, q=q)

    @classmethod
    def G(cls, r: Optional[int] = None) -> "TorClass":
        return cls("G", r=r)

    def __str__(self):
        if self.tag == "C3":
            return "C(3)"
        if self.tag == "G":
            return "G(?)" if self.r is None else f"G({self.r})"
        if self.tag == "H":
            return f"H({self.p},{self.q})"
        return self.tag

    @classmethod
    def parse(cls, text: str) -> "TorClass":
        text = text.replace(" ", "")
        if text in ("B", "T"):
            return cls(text)
        if text == "C(3)":
            return cls("C3")
        if text.startswith("G(") and text.endswith(")"):
            inner = text[2:-1]
            return cls.G(None if inner == "?" else int(inner))
        if text.startswith("H(") and text.endswith(")"):
            p, q = text[2:-1].split(",")
            return cls.H(int(p), int(q))
        raise ValueError(f"cannot parse class {text!r}")


B = TorClass("B")
T_CLASS = TorClass("T")

# (t, p) -> class, when the G-trimming condition fails
CLASS_TABLE = {
    (3, 0): B,
    (3, 1): TorClass.H(1, 1),
    (3, 2): TorClass.H(1, 0),
    (2, 1): B,
    (2, 2): TorClass.H(2, 1),
    (2, 3): T_CLASS,
    (1, 2): B,
    (1, 3): TorClass.H(3, 2),
}


def format_tuple(fmt) -> str:
    return "(" + ",".join(map(str, fmt)) + ")"


def trimmed_format(t: int, rank_q: int) -> tuple:
    return (1, 5 + 2 * t - rank_q, 5 + 3 * t - rank_q, 1 + t)


# -- permutations -----------------------------------------------------------


def cycle_to_images(cycle: Sequence[int], n: int = 5) -> tuple:
    """Images ``(rho(1), ..., rho(n))`` of the cycle ``(a1, a2, ...)``."""
    img = list(range(1, n + 1))
    for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        img[a - 1] = b
    if sorted(img) != list(range(1, n + 1)):
        raise ValueError(f"{cycle} is not a cycle on 1..{n}")
    return tuple(img)


def conjugate_by_permutation(T: SkewMatrix, perm: Sequence[int]) -> SkewMatrix:
    """``P T P^-1`` with ``P e_b = e_{perm[b-1]}``; ``perm`` is a tuple of images."""
    return permute(T, perm)


def trim_permutation(trim: Iterable[int], m: int = 5) -> tuple:
    """Images of the permutation that moves the trim set onto ``{1..t}``
    (trimmed indices first, each block ascending)."""
    trim = sorted(set(trim))
    order = trim + [a for a in range(1, m + 1) if a not in trim]
    images = [0] * m
    for new, old in enumerate(order, start=1):
        images[old - 1] = new
    return tuple(images)


# -- classification ---------------------------------------------------------


@dataclass
class TrimReport:
    trim: tuple
    permutation: tuple  # images; the conjugated matrix trims its first t generators
    t: int
    qbar: QBar
    g_condition: bool
    p: int
    rank: int
    tor_class: TorClass
    format: tuple
    mu: int
    format_extended: bool = False
    pfaffian_signs: tuple = ()
    warnings: list = field(default_factory=list)

    def summary(self) -> str:
        return f"{self.tor_class}, format {format_tuple(self.format)}, mu={self.mu}"


def permute_cbar(c: CBar, images: Sequence[int]) -> CBar:
    """Residues of ``P T P^-1``: ``c'(rho(i), rho(j), l) = c(i, j, l)``."""
    vals = {(images[i - 1], images[j - 1], l): v for (i, j, l), v in c._v.items()}
    return CBar(c.field, vals, c.m)


def classify_linear(c: CBar, t: int) -> tuple:
    """``(qbar, g_condition, p, rank, class)`` for trimming the first t generators."""
    q = build_qbar(c, t)
    g = g_trimming_condition(c, t)
    pivots = rref(q.matrix)[1]
    p = sum(1 for col in pivots if col > t)
    rk = len(pivots)
    if t == 5:
        cls = TorClass.G(0)
    elif t == 4:
        cls = TorClass.G(1 - p)
    elif g:
        cls = TorClass.G()
    else:
        cls = CLASS_TABLE.get((t, p))
        if cls is None:
            raise ClassificationError(
                f"no class for t={t}, p(T,t)={p}, rank={rk}; the input is probably not a "
                "grade 3 Gorenstein presentation"
            )
    return q, g, p, rk, cls


def classify(T: SkewMatrix, trim: Iterable[int], check_pfaffians: bool = True) -> TrimReport:
    """Classify the ideal obtained by trimming the generators indexed by ``trim``."""
    if T.size != 5:
        raise ValueError(f"classification requires m=5, got m={T.size}")
    trim = tuple(sorted(set(trim)))
    if not trim or any(not 1 <= a <= 5 for a in trim):
        raise ValueError(f"trim set must be a nonempty subset of 1..5, got {trim}")
    t = len(trim)
    perm = trim_permutation(trim)
    Tp = T if perm == (1, 2, 3, 4, 5) else conjugate_by_permutation(T, perm)
    warnings = []
    signs = ()
    if check_pfaffians:
        old, new = pfaffians(T), pfaffians(Tp)
        signs = []
        for a in range(1, 6):
            src = new[perm[a - 1] - 1]  # generator a of T is generator perm(a) of T'
            if src == old[a - 1]:
                signs.append(1)
            elif src == -old[a - 1]:
                signs.append(-1)
            else:
                raise ArithmeticError(f"conjugation changed pf_{a} beyond a sign")
        signs = tuple(signs)
        zero = [a for a, p in enumerate(old, start=1) if not p]
        if zero:
            msg = f"pf_{zero} vanish; the input cannot present a grade 3 Gorenstein ideal"
            log.warning(msg)
            warnings.append(msg)
    q, g, p, rk, cls = classify_linear(build_cbar(Tp), t)
    fmt = trimmed_format(t, rk)
    return TrimReport(
        trim=trim,
        permutation=perm,
        t=t,
        qbar=q,
        g_condition=g,
        p=p,
        rank=rk,
        tor_class=cls,
        format=fmt,
        mu=fmt[1],
        format_extended=t >= 4,
        pfaffian_signs=signs,
        warnings=warnings,
    )


def all_trims(m: int = 5, sizes: Iterable[int] = (1, 2, 3, 4, 5)):
    for s in sizes:
        yield from combinations(range(1, m + 1), s)
