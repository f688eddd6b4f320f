"""A five-generated grade 3 Gorenstein ideal over F2[x,y,z] realizing every
non-G class for t = 1, 2, 3, with the reference data it must reproduce."""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import FieldMatrix, PolyMatrix
from .pfaffian import SkewMatrix, pfaffians, resolution
from .polyring import GF2, Ring
from .trimclass import TorClass, build_cbar, build_qbar, classify, conjugate_by_permutation, cycle_to_images

RING = Ring(GF2, ("x", "y", "z"))

MATRIX = (
    ("0", "y+z", "z", "z+y^2", "z"),
    ("y+z", "0", "x", "x+y+z", "x+y+z+z^2"),
    ("z", "x", "0", "z", "x+z"),
    ("z+y^2", "x+y+z", "z", "0", "x^2"),
    ("z", "x+y+z+z^2", "x+z", "x^2", "0"),
)

PFAFFIANS = (
    "x^3+z^3+x^2+x*y+x*z",
    "x*y^2+x^2*z+y^2*z+x*z",
    "y^2*z^2+x^2*y+x*y^2+y^3+x^2*z+y^2*z+z^3",
    "z^3+x*y+x*z",
    "x*y^2",
)

QBAR_123 = (
    (0, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 1, 1, 1, 1),
    (0, 0, 1, 1, 1),
    (1, 0, 0, 1, 1),
    (1, 0, 0, 1, 1),
    (0, 1, 0, 0, 1),
    (0, 0, 0, 0, 0),
    (1, 0, 0, 1, 1),
)

CYCLE = (1, 4, 2, 5, 3)

# as displayed; it is the transpose of the matrix sending e_b to e_{rho(b)}
PERMUTATION_MATRIX = (
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 1, 0, 0),
)

MATRIX_CONJUGATED = (
    ("0", "z", "x+z", "z", "x"),
    ("z", "0", "x^2", "z+y^2", "x+y+z"),
    ("x+z", "x^2", "0", "z", "x+y+z+z^2"),
    ("z", "z+y^2", "z", "0", "y+z"),
    ("x", "x+y+z", "x+y+z+z^2", "y+z", "0"),
)

QBAR_CONJUGATED = (
    (0, 0, 1, 0, 1),
    (0, 0, 0, 0, 0),
    (0, 1, 1, 1, 0),
    (0, 0, 0, 0, 1),
    (0, 0, 0, 0, 1),
    (1, 0, 0, 1, 1),
    (1, 0, 0, 0, 1),
    (0, 0, 0, 0, 1),
    (1, 0, 0, 1, 1),
)

# unit * lhs == sum(multiplier * pf_index); units cleared from the power-series form
GRADE_IDENTITIES = (
    ("x^2", "1+x", "x^2", [("1", 1), ("1", 4)]),
    (
        "y^5",
        "1",
        "y^5",
        [("y^2*z+y^2", 2), ("y^2", 3), ("y^2", 4), ("y^2*z+x*z^2+x*y+z^2+y", 5)],
    ),
    (
        "z^6",
        "1+z^4",
        "z^6",
        [
            ("x*y^3+x^2*z+x*z", 2),
            ("z^7+x*y*z^4+x*z^5+x^2*y^2*z+x^2*z^3+x^3*y+x^3*z+z^3+x*y+x*z", 4),
            ("x*y^3+y^3*z+x^2*z^2+x^3+x^2*z+x*y*z+x*z^2+x*z+z^2+x", 5),
        ],
    ),
)

CLASS_TABLE = (
    ((1, 2, 4), "B"),
    ((1, 2, 3), "H(1,1)"),
    ((3, 4, 5), "H(1,0)"),
    ((1, 2), "B"),
    ((3, 4), "H(2,1)"),
    ((3, 5), "T"),
    ((1,), "B"),
    ((5,), "H(3,2)"),
)

# rank of Qbar per table row
RANKS = {(1, 2, 3): 4, (3, 4, 5): 5}


def example_matrix() -> SkewMatrix:
    return SkewMatrix.from_rows(RING, MATRIX)


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


def verify_example(T: SkewMatrix = None) -> list:
    """Re-derive the reference data from ``T`` (default: the embedded matrix)."""
    T = T if T is not None else example_matrix()
    R = T.ring
    checks = []

    pfs = pfaffians(T)
    for n, (got, want) in enumerate(zip(pfs, PFAFFIANS), start=1):
        want = R.parse(want)
        checks.append(Check(f"pf_{n}", got == want, f"{got}" if got == want else f"{got} != {want}"))

    try:
        resolution(T)
        checks.append(Check("resolution is a complex", True))
    except ArithmeticError as exc:
        checks.append(Check("resolution is a complex", False, str(exc)))

    for label, unit, lhs, terms in GRADE_IDENTITIES:
        left = R.parse(unit) * R.parse(lhs)
        right = R.zero
        for mult, idx in terms:
            right = right + R.parse(mult) * pfs[idx - 1]
        checks.append(Check(f"{label} lies in the ideal", left == right, f"({unit})*{lhs}"))

    q = build_qbar(build_cbar(T), 3).matrix
    checks.append(Check("Qbar for trim {1,2,3}", q == FieldMatrix(GF2, QBAR_123), str(q.tolist())))

    Tc = conjugate_by_permutation(T, cycle_to_images(CYCLE))
    want_tc = SkewMatrix.from_rows(R, MATRIX_CONJUGATED)
    checks.append(Check("conjugated matrix", Tc == want_tc))
    P = PolyMatrix(R, PERMUTATION_MATRIX)
    checks.append(
        Check("displayed permutation matrix acts as P^-1 T P", (P.transpose() @ T.matrix @ P) == want_tc.matrix)
    )
    pc = pfaffians(Tc)
    checks.append(
        Check("pf_1,2,3 of conjugate = pf_3,4,5", all(pc[a] == pfs[a + 2] for a in range(3)))
    )
    qc = build_qbar(build_cbar(Tc), 3).matrix
    checks.append(Check("Qbar of the conjugate", qc == FieldMatrix(GF2, QBAR_CONJUGATED), str(qc.tolist())))

    for trim, want in CLASS_TABLE:
        try:
            rep = classify(T, trim)
        except (ValueError, ArithmeticError) as exc:
            checks.append(Check(f"trim {trim}", False, str(exc)))
            continue
        ok = rep.tor_class == TorClass.parse(want) and not rep.g_condition
        if trim in RANKS:
            ok = ok and rep.rank == RANKS[trim]
        checks.append(Check(f"trim {trim} -> {want}", ok, rep.summary()))
    return checks
