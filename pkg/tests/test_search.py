import random

import pytest

from gortrim.example import example_matrix
from gortrim.pfaffian import SkewMatrix
from gortrim.search import SearchConfig, classify_trial, monomials, random_skew_matrix, run_search, trial_rng

from instances import ring


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(degree=0)
    with pytest.raises(ValueError):
        SearchConfig(trials=0)
    with pytest.raises(ValueError):
        SearchConfig(trim_sizes=(0,))
    with pytest.raises(ValueError):
        SearchConfig(field="F9")


def test_monomials():
    assert len(monomials(3, 1)) == 3
    assert len(monomials(3, 2)) == 9
    assert (0, 0, 0) not in monomials(3, 2)


def test_random_matrix_is_valid_and_reproducible():
    R = ring("F5")
    a = random_skew_matrix(R, 2, trial_rng(1, 7))
    b = random_skew_matrix(R, 2, trial_rng(1, 7))
    assert isinstance(a, SkewMatrix) and a == b
    assert a != random_skew_matrix(R, 2, trial_rng(1, 8))
    assert all(p.total_degree() <= 2 for row in a.matrix.rows for p in row)


def test_single_trial_with_example_has_all_classes():
    res = run_search(SearchConfig(trials=1, seed=0))
    classes = {k for k in res.census}
    for key in ["t=3 B", "t=3 H(1,1)", "t=3 H(1,0)", "t=2 B", "t=2 H(2,1)", "t=2 T", "t=1 B", "t=1 H(3,2)"]:
        assert key in classes


def test_vanishing_pfaffian_trial_is_skipped():
    R = ring("F2")
    x = R.gen(1)
    # only T[1,2] nonzero: pf_1..pf_5 are all zero
    T = SkewMatrix.from_upper(R, {(1, 2): x}, 5)
    assert classify_trial(T, [(1,)]) == {}


def test_determinism_and_parallel_agree():
    cfg = SearchConfig(trials=40, seed=11)
    a = run_search(cfg).to_json()
    assert a == run_search(cfg).to_json()
    par = run_search(SearchConfig(trials=40, seed=11, workers=2)).to_json()
    assert a == par
    assert a != run_search(SearchConfig(trials=40, seed=12)).to_json()


def test_rational_search_runs():
    res = run_search(SearchConfig(field="Q", degree=1, trials=15, seed=2))
    assert sum(res.census.values()) > 0
    assert all(k.split()[1] != "miss" for k in res.census)


def test_example_not_injected_for_other_fields():
    res = run_search(SearchConfig(field="F3", degree=1, trials=3, seed=0))
    assert all(w[0] != 0 for w in res.witnesses.values())
