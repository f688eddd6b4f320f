"""Symbolic checks of the minor identities relating the product matrix E and
Qbar when two generators are trimmed.

The computations run over ZZ[x_211, ..., x_523], where ``x_ikl`` stands for
the residue ``cbar(i, k, l)``; the generic 6 x 5 matrix Q is Qbar for t = 2.
Entries of E follow the executable convention: r is the smaller and h the
larger complement index, and the 2x2 block takes columns (r, h).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .linalg import FieldMatrix, PolyMatrix, det, det_poly, minors, submatrix
from .pfaffian import sigma3, sigma5
from .polyring import ZZ, Poly, PrimeField, Ring

VARIABLE_NAMES = (
    "x_211", "x_212", "x_213", "x_311", "x_312", "x_313",
    "x_411", "x_412", "x_413", "x_511", "x_512", "x_513",
    "x_321", "x_322", "x_323", "x_421", "x_422", "x_423",
    "x_521", "x_522", "x_523",
)  # fmt: skip

GENERIC_RING = Ring(ZZ, VARIABLE_NAMES)

# rows of E: (k, (alpha, beta)); columns: (i, j)
E_ROWS = tuple((k, ab) for k in (1, 2) for ab in ((1, 2), (1, 3), (2, 3)))
E_COLS = ((3, 4), (3, 5), (4, 5))


def generic_q(ring: Ring = GENERIC_RING) -> PolyMatrix:
    x = {name: ring.gen(name) for name in VARIABLE_NAMES}
    z = ring.zero
    rows = []
    for l in (1, 2, 3):
        rows.append([z] + [x[f"x_{i}1{l}"] for i in (2, 3, 4, 5)])
    for l in (1, 2, 3):
        rows.append([-x[f"x_21{l}"], z] + [x[f"x_{i}2{l}"] for i in (3, 4, 5)])
    return PolyMatrix(ring, rows)


def _complement(*idx):
    return [a for a in range(1, 6) if a not in idx]


def entry_in_E(Q: PolyMatrix, k, i, j, alpha, beta, swap: bool = False) -> Poly:
    """Signed 2x2 determinant giving E at ``(k, alpha, beta), (i, j)``.

    ``swap=True`` exchanges the roles of r and h.
    """
    if k not in (1, 2) or not (3 <= i < j <= 5) or not (1 <= alpha < beta <= 3):
        raise ValueError(f"bad E index (k={k}, i={i}, j={j}, alpha={alpha}, beta={beta})")
    rh = _complement(k, i, j)
    r, h = (rh[-1], rh[0]) if swap else (rh[0], rh[-1])
    ra, rb = 3 * (k - 1) + alpha, 3 * (k - 1) + beta
    # columns in the order (r, h); submatrix() would sort them
    d = Q.entry(ra, r) * Q.entry(rb, h) - Q.entry(ra, h) * Q.entry(rb, r)
    s = sigma3(i, j, r) * sigma5(i, j, r, h, k)
    return d if s > 0 else -d


def get_E_matrix(Q: PolyMatrix, swap: bool = False) -> PolyMatrix:
    return PolyMatrix(
        Q.ring,
        [[entry_in_E(Q, k, i, j, a, b, swap) for (i, j) in E_COLS] for k, (a, b) in E_ROWS],
    )


# -- the 3x3 identities -----------------------------------------------------

# removed rows of E -> [(sign, variable, removed row of Q)]
IDENTITIES_3X3_PART1 = {
    (1, 2, 5): [(1, "x_212", 1)],
    (1, 2, 4): [(1, "x_213", 1)],
    (1, 3, 6): [(1, "x_211", 2)],
    (1, 3, 4): [(1, "x_213", 2)],
    (2, 3, 6): [(1, "x_211", 3)],
    (2, 3, 5): [(1, "x_212", 3)],
    (2, 4, 5): [(-1, "x_212", 4)],
    (1, 4, 5): [(-1, "x_213", 4)],
    (3, 4, 6): [(-1, "x_211", 5)],
    (1, 4, 6): [(-1, "x_213", 5)],
    (3, 5, 6): [(-1, "x_211", 6)],
    (2, 5, 6): [(-1, "x_212", 6)],
}

IDENTITIES_3X3_PART2 = {
    (1, 2, 3): [],
    (1, 2, 6): [(1, "x_211", 1)],
    (3, 4, 5): [(-1, "x_211", 4)],
    (2, 3, 4): [(-1, "x_211", 1), (1, "x_212", 2)],
    (4, 5, 6): [],
    (1, 3, 5): [(1, "x_212", 2)],
    (2, 4, 6): [(-1, "x_212", 5)],
    (1, 5, 6): [(1, "x_211", 4), (-1, "x_212", 5)],
}


@dataclass
class IdentityResult:
    label: str
    removed_rows: tuple
    holds: bool
    lhs: Poly
    rhs: Poly


@dataclass
class LemmaReport:
    name: str
    results: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.holds for r in self.results) and self.detail.get("ok", True)

    def failures(self) -> list:
        return [r for r in self.results if not r.holds]


def _rhs_text(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for n, (sign, var, row) in enumerate(terms):
        op = ("-" if sign < 0 else "") if n == 0 else (" - " if sign < 0 else " + ")
        parts.append(f"{op}{var}*|Q minus row {row}|")
    return "".join(parts)


def check_identities(identities: dict, name: str, E: Optional[PolyMatrix] = None,
                     Q: Optional[PolyMatrix] = None) -> LemmaReport:
    Q = Q if Q is not None else generic_q()
    E = E if E is not None else get_E_matrix(Q)
    ring = Q.ring
    q_dets = {}
    report = LemmaReport(name)
    for removed, terms in identities.items():
        lhs = det_poly(submatrix(E, remove_rows=removed))
        rhs = ring.zero
        for sign, var, row in terms:
            if row not in q_dets:
                q_dets[row] = det_poly(submatrix(Q, remove_rows=[row]))
            t = ring.gen(var) * q_dets[row]
            rhs = rhs + t if sign > 0 else rhs - t
        label = f"|E minus rows {','.join(map(str, removed))}| = {_rhs_text(terms)}"
        report.results.append(IdentityResult(label, removed, lhs == rhs, lhs, rhs))
    return report


def check_lemma_3x3_part1(E=None, Q=None) -> LemmaReport:
    return check_identities(IDENTITIES_3X3_PART1, "E 3x3 minors, part 1", E, Q)


def check_lemma_3x3_part2(E=None, Q=None) -> LemmaReport:
    return check_identities(IDENTITIES_3X3_PART2, "E 3x3 minors, part 2", E, Q)


# -- 2x2 minors of E versus 4x4 minors of Q ---------------------------------


def _monic_sorted(polys) -> tuple:
    """Check leading coefficients are +-1, normalize to +1, dedupe, sort."""
    monic = set()
    for f in polys:
        if not f:
            raise ValueError("zero minor encountered")
        lc = f.leading_coefficient()
        if lc not in (1, -1):
            raise ValueError(f"leading coefficient {lc} is not a unit: {f}")
        monic.add(f if lc == 1 else -f)
    return tuple(sorted(monic, key=Poly.sort_key))


def q_4x4_minors(Q: PolyMatrix) -> list:
    col_sets = [c for c in combinations(range(1, 6), 4) if 1 in c and 2 in c]
    return [
        det_poly(submatrix(Q, rows, cols))
        for rows in combinations(range(1, 7), 4)
        for cols in col_sets
    ]


def e_2x2_minors(E: PolyMatrix) -> list:
    return [d for _, _, d in minors(E, 2)]


def check_lemma_2x2(E=None, Q=None) -> LemmaReport:
    Q = Q if Q is not None else generic_q()
    E = E if E is not None else get_E_matrix(Q)
    report = LemmaReport("E 2x2 minors vs Q 4x4 minors")
    raw_q, raw_e = q_4x4_minors(Q), e_2x2_minors(E)
    d = report.detail
    d["q_minors"], d["e_minors"] = len(raw_q), len(raw_e)
    try:
        mq, me = _monic_sorted(raw_q), _monic_sorted(raw_e)
    except ValueError as exc:
        d.update(ok=False, error=str(exc))
        return report
    d["q_distinct"], d["e_distinct"] = len(mq), len(me)
    d["only_in_q"] = [str(f) for f in mq if f not in set(me)]
    d["only_in_e"] = [str(f) for f in me if f not in set(mq)]
    d["ok"] = mq == me
    return report


def check_rh_invariance(Q=None) -> LemmaReport:
    """E is unchanged when the roles of r and h are exchanged."""
    Q = Q if Q is not None else generic_q()
    report = LemmaReport("r/h order invariance")
    for k, (a, b) in E_ROWS:
        for i, j in E_COLS:
            p1 = entry_in_E(Q, k, i, j, a, b)
            p2 = entry_in_E(Q, k, i, j, a, b, swap=True)
            report.results.append(
                IdentityResult(f"E[(k={k},{a}{b}),({i},{j})]", (), p1 == p2, p1, p2)
            )
    return report


def verify_all() -> list:
    Q = generic_q()
    E = get_E_matrix(Q)
    return [
        check_lemma_3x3_part1(E, Q),
        check_lemma_3x3_part2(E, Q),
        check_lemma_2x2(E, Q),
        check_rh_invariance(Q),
    ]


# -- numeric cross-check ----------------------------------------------------


def specialize(M: PolyMatrix, point, field) -> FieldMatrix:
    return M.evaluate(point, field)


def random_specialization_check(trials: int = 20, p: int = 5, seed: int = 0) -> list:
    """Evaluate both sides of every 3x3 identity at random F_p points, computing
    E and the Q determinants directly over F_p.  Returns mismatching labels."""
    f = PrimeField(p)
    rng = random.Random(seed)
    Q = generic_q()
    bad = []
    for _ in range(trials):
        point = [rng.randrange(p) for _ in VARIABLE_NAMES]
        val = dict(zip(VARIABLE_NAMES, point))
        Qf = Q.evaluate(point, f)
        Ef = e_matrix_from_values(Qf)
        for ids in (IDENTITIES_3X3_PART1, IDENTITIES_3X3_PART2):
            for removed, terms in ids.items():
                lhs = det(submatrix(Ef, remove_rows=removed))
                rhs = f(sum(s * val[v] * det(submatrix(Qf, remove_rows=[row])) for s, v, row in terms))
                if lhs != rhs:
                    bad.append((removed, point))
    return bad


def e_matrix_from_values(Qf: FieldMatrix, swap: bool = False) -> FieldMatrix:
    """E computed directly from a numeric 6x5 Qbar with the same convention."""
    f = Qf.field
    rows = []
    for k, (a, b) in E_ROWS:
        row = []
        for i, j in E_COLS:
            rh = _complement(k, i, j)
            r, h = (rh[-1], rh[0]) if swap else (rh[0], rh[-1])
            blk = 3 * (k - 1)
            m = Qf.entry(blk + a, r) * Qf.entry(blk + b, h) - Qf.entry(blk + a, h) * Qf.entry(blk + b, r)
            row.append(f(sigma3(i, j, r) * sigma5(i, j, r, h, k) * m))
        rows.append(row)
    return FieldMatrix(f, rows)
