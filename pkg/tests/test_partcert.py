from itertools import combinations_with_replacement

import pytest
from hypothesis import given, strategies as st

from simsim.branching import count
from simsim.partcert import (p5, d_coeff, certify_nonneg, check_inequalities,
                             naive_pc57_counterexamples,
                             naive_pc58_counterexamples)


def p5_brute(j, k):
    return sum(1 for parts in combinations_with_replacement(range(1, 6), k)
               if sum(parts) == j)


@given(st.integers(0, 40), st.integers(0, 8))
def test_p5_matches_brute_force(j, k):
    assert p5(j, k) == p5_brute(j, k)


def test_p5_edges():
    assert p5(0, 0) == 1
    assert p5(3, 0) == 0
    assert p5(5, 1) == 1
    assert p5(6, 1) == 0
    assert p5(30, 6) == 1  # all parts equal to 5


def test_d_coeff_matches_generating_polynomial():
    for k in range(1, 12):
        c = count(4, k)
        for j in range(0, 5 * k + 11):
            assert d_coeff(j, k) == c.coeff(j), (j, k)


def test_certify_nonneg_clean():
    rep = certify_nonneg(40)
    assert rep.ok
    assert rep.violations == []
    assert rep.checked > 0


def test_check_inequalities_clean():
    rep = check_inequalities(40)
    assert rep.ok
    assert rep.counterexamples == []


def test_unrepaired_boundary_statements_fail():
    # the printed per-pair forms are false; the certificate checks the
    # combined pairing instead, and these document why
    assert naive_pc58_counterexamples(10)[0] == (13, 5)
    assert naive_pc57_counterexamples(12)[0] == (37, 9)


def test_check_inequalities_requires_kmax():
    with pytest.raises(ValueError):
        check_inequalities(3)
