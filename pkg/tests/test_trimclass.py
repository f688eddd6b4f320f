import random
from itertools import combinations

import pytest

from gortrim.example import example_matrix
from gortrim.linalg import rank
from gortrim.pfaffian import permute, pfaffians
from gortrim.polyring import GF2
from gortrim.trimclass import (
    CBar,
    ClassificationError,
    TorClass,
    all_trims,
    build_cbar,
    build_qbar,
    classify,
    classify_linear,
    conjugate_by_permutation,
    cycle_to_images,
    d_coefficient,
    format_tuple,
    g_trimming_condition,
    p_invariant,
    permute_cbar,
    product_a_matrix,
    product_e_determinants,
    trim_permutation,
    trimmed_format,
)

from instances import FIELDS, random_skew, ring


def test_torclass_parse_and_identifications():
    assert TorClass.parse("H(1,1)") == TorClass.H(1, 1)
    assert str(TorClass.parse("G(?)")) == "G(?)"
    assert TorClass.H(0, 0) == TorClass.G(0)
    assert TorClass.H(0, 1) == TorClass.G(1)
    assert str(TorClass.parse("C(3)")) == "C(3)"
    with pytest.raises(ValueError):
        TorClass.parse("Z(1)")


def test_formats():
    assert format_tuple(trimmed_format(3, 4)) == "(1,7,10,4)"
    assert format_tuple(trimmed_format(2, 5)) == "(1,4,6,3)"
    assert trimmed_format(1, 3) == (1, 4, 5, 2)


def test_cycle_and_trim_permutations():
    assert cycle_to_images((1, 4, 2, 5, 3)) == (4, 5, 1, 2, 3)
    assert trim_permutation((1, 2, 3)) == (1, 2, 3, 4, 5)
    # generators 3 and 5 move to the front, the rest keep their order
    assert trim_permutation((3, 5)) == (3, 4, 1, 5, 2)
    assert trim_permutation((5, 3)) == trim_permutation((3, 5))


def test_cbar_reads_linear_part_of_transposed_entry():
    T = example_matrix()
    c = build_cbar(T)
    # T[2,1] = y + z, so cbar(1, 2, .) = (0, 1, 1)
    assert c.column(1, 2) == (0, 1, 1)
    # T[5,4] = x^2 has no linear part
    assert c.column(4, 5) == (0, 0, 0)


@pytest.mark.parametrize("field_name", FIELDS)
def test_conjugation_commutes_with_cbar(field_name):
    R = ring(field_name)
    rng = random.Random(field_name)
    for _ in range(10):
        T = random_skew(R, 5, rng)
        images = tuple(rng.sample(range(1, 6), 5))
        assert build_cbar(permute(T, images)) == permute_cbar(build_cbar(T), images)


@pytest.mark.parametrize("field_name", FIELDS)
def test_d_coefficient_independent_of_complement_order(field_name):
    R = ring(field_name)
    rng = random.Random(field_name + "d")
    for _ in range(10):
        c = build_cbar(random_skew(R, 5, rng, degree=1))
        for k in range(1, 6):
            for i, j in combinations([a for a in range(1, 6) if a != k], 2):
                r, h = [a for a in range(1, 6) if a not in (k, i, j)]
                for a, b in ((1, 2), (1, 3), (2, 3)):
                    assert d_coefficient(c, k, i, j, a, b, (r, h)) == d_coefficient(c, k, i, j, a, b, (h, r))
        with pytest.raises(ValueError):
            d_coefficient(c, 1, 2, 3, 1, 2, (1, 4))


def test_p_invariant_matches_classify_linear():
    c = build_cbar(example_matrix())
    for t in (1, 2, 3):
        assert p_invariant(build_qbar(c, t)) == classify_linear(c, t)[2]


def test_product_a_matrix_shape():
    c = build_cbar(example_matrix())
    A = product_a_matrix(c, 2)
    assert (A.matrix.nrows, A.matrix.ncols) == (6, 3)
    assert A.col_labels == ((3, 4), (3, 5), (4, 5))
    assert product_a_matrix(c, 4).matrix.ncols == 0


def test_product_e_vanishes_when_no_trailing_pivots():
    """When p(T,3) = 0 every e_i f_j with i > 3 and j <= 3 is zero."""
    R = ring("F2")
    rng = random.Random("p0")
    found = 0
    for _ in range(3000):
        c = build_cbar(random_skew(R, 5, rng, degree=1, density=0.35))
        q = build_qbar(c, 3)
        if g_trimming_condition(c, 3) or p_invariant(q) != 0:
            continue
        found += 1
        assert all(v == 0 for v in product_e_determinants(c, 3).values())
    assert found >= 5


def test_classification_table_miss_raises():
    # not the residue data of any skew matrix: column 5 copies column 1 in
    # block 1 while the G-condition still fails, so p(T,2) = 0
    vals = {(1, 1, 2): 1, (2, 1, 1): 1, (5, 1, 2): 1}
    c = CBar(GF2, vals)
    assert not g_trimming_condition(c, 2)
    with pytest.raises(ClassificationError):
        classify_linear(c, 2)


def test_classify_scope_errors():
    R = ring("F2")
    T7 = random_skew(R, 7, random.Random(1))
    with pytest.raises(ValueError, match="classification requires m=5"):
        classify(T7, (1, 2))
    with pytest.raises(ValueError):
        classify(example_matrix(), (0, 1))
    with pytest.raises(ValueError):
        classify(example_matrix(), ())


def test_report_for_every_trim_of_the_example():
    T = example_matrix()
    reports = [classify(T, S) for S in all_trims()]
    assert len(reports) == 31
    for r in reports:
        assert r.mu == r.format[1]
        assert r.format_extended == (r.t >= 4)
        assert r.warnings == []
    assert str(classify(T, range(1, 6)).tor_class) == "G(0)"


def test_t4_uses_p():
    T = example_matrix()
    for S in combinations(range(1, 6), 4):
        r = classify(T, S)
        assert r.tor_class == TorClass.G(1 - r.p)


def test_classify_reports_pfaffian_signs():
    T = example_matrix()
    rep = classify(T, (3, 4, 5))
    assert len(rep.pfaffian_signs) == 5
    Tc = conjugate_by_permutation(T, rep.permutation)
    assert pfaffians(Tc)[0] in (pfaffians(T)[2], -pfaffians(T)[2])


def test_rank_bridge_on_example():
    c = build_cbar(example_matrix())
    for S in combinations(range(1, 6), 2):
        cp = permute_cbar(c, trim_permutation(S))
        if not g_trimming_condition(cp, 2):
            assert rank(product_a_matrix(cp, 2).matrix) == rank(build_qbar(cp, 2).matrix) - 2


@pytest.mark.parametrize("field_name", FIELDS)
def test_classify_is_permutation_coherent(field_name):
    R = ring(field_name)
    rng = random.Random(field_name + "coh")
    for _ in range(15):
        T = random_skew(R, 5, rng, degree=1)
        if any(not p for p in pfaffians(T)):
            continue
        t = rng.randint(1, 3)
        S = tuple(sorted(rng.sample(range(1, 6), t)))
        rep = classify(T, S)
        direct = classify(conjugate_by_permutation(T, rep.permutation), range(1, t + 1))
        assert (rep.tor_class, rep.p, rep.rank, rep.qbar) == (direct.tor_class, direct.p, direct.rank, direct.qbar)


def test_conjugation_identity_and_involution():
    T = example_matrix()
    assert conjugate_by_permutation(T, (1, 2, 3, 4, 5)) == T
    swap = (2, 1, 3, 5, 4)
    assert conjugate_by_permutation(conjugate_by_permutation(T, swap), swap) == T
    Tc = conjugate_by_permutation(T, cycle_to_images((1, 4, 2, 5, 3)))
    old, new = pfaffians(T), pfaffians(Tc)
    assert new[:3] == old[2:]
