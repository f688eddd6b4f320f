from gortrim.example import MATRIX, RING, example_matrix, verify_example
from gortrim.pfaffian import SkewMatrix


def test_every_check_passes():
    checks = verify_example()
    assert len(checks) >= 18
    assert [c.name for c in checks if not c.passed] == []


def test_mutated_matrix_fails_some_check():
    rows = [list(r) for r in MATRIX]
    rows[3][4] = "x^2+y"
    rows[4][3] = "x^2+y"
    checks = verify_example(SkewMatrix.from_rows(RING, rows))
    assert any(not c.passed for c in checks)


def test_example_entries_are_in_the_maximal_ideal():
    T = example_matrix()
    assert all(p.constant_term() == 0 for row in T.matrix.rows for p in row)
