import pytest

from simsim.branching import (branching_matrix, count, derived_matrix,
                              TYPE_BRANCHES, RCF_PROBS, average_branches)
from simsim.polyq import PolyQ, RatQ, parse_polyq

KNOWN = {
    (2, 1): "q^2 + q",
    (2, 2): "q^4 + q^3 + q^2",
    (3, 1): "q^3 + q^2 + q",
    (3, 2): "q^6 + q^5 + 2*q^4 + q^3 + 2*q^2",
    (3, 3): "q^9 + q^8 + 2*q^7 + 2*q^6 + 3*q^5 + 2*q^4 + 2*q^3",
}


@pytest.mark.parametrize("nk,expect", sorted(KNOWN.items()))
def test_known_polynomials(nk, expect):
    assert count(*nk) == parse_polyq(expect)


def test_count_k1_is_class_count():
    # c_{n,1} counts similarity classes of single matrices
    assert count(4, 1) == parse_polyq("q^4 + q^3 + 2*q^2 + q")
    assert count(4, 1).eval_at(2) == 34


def test_counts_integral_and_nonneg():
    for n in (2, 3, 4):
        for k in range(1, 8):
            c = count(n, k)
            assert c.is_integral()
            assert c.is_nonneg()


def test_matrix_shapes():
    assert len(branching_matrix(2).index) == 2
    assert len(branching_matrix(3).index) == 3
    assert len(branching_matrix(4).index) == 11


def test_column_sums_match_branch_totals():
    # every column of B_3 sums to the number of branches of that source,
    # which for a regular source is q^n
    B = branching_matrix(3)
    total = sum((B.entry(t, (3,)) for t in B.index), PolyQ())
    assert total == PolyQ.q(3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_derived_matrix_reproduces_stored(n):
    B = branching_matrix(n)
    D = derived_matrix(n)
    for i, tgt in enumerate(B.index):
        for j, src in enumerate(B.index):
            assert D.entries[i][j] == B.entries[i][j], (tgt, src)


def test_probabilities_sum_to_one():
    for n, by_rcf in RCF_PROBS.items():
        for lam, probs in by_rcf.items():
            total = RatQ(0)
            for p in probs.values():
                total = total + p
            assert total == RatQ(1), (n, lam)


def test_average_branches_rejects_bad_probabilities():
    rows = {"(3,1)_1": (RatQ(1, PolyQ.q(2)), TYPE_BRANCHES[4]["(3,1)_1"])}
    with pytest.raises(ValueError):
        average_branches(rows, (3, 1))


def test_branch_tables_are_polynomial_in_q():
    for n, table in TYPE_BRANCHES.items():
        for src, row in table.items():
            for tgt, poly in row.items():
                assert poly.eval_at(2) >= 0, (n, src, tgt)
