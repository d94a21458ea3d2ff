from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from simsim.polyq import (PolyQ, parse_polyq, RatQ, closed_form,
                          verify_closed_form)

small_polys = st.dictionaries(st.integers(0, 8), st.integers(-9, 9),
                              max_size=5).map(PolyQ)


@given(small_polys, small_polys, small_polys)
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f - g) + g == f


@given(small_polys, st.integers(-3, 5))
def test_eval_is_hom(f, x):
    g = PolyQ({2: 1, 0: -1})
    assert (f * g).eval_at(x) == f.eval_at(x) * g.eval_at(x)
    assert (f + g).eval_at(x) == f.eval_at(x) + g.eval_at(x)


@given(small_polys)
def test_render_parse_round_trip(f):
    assert parse_polyq(f.render()) == f


def test_render_examples():
    assert PolyQ({6: 1, 5: 1, 4: 2}).render() == "q^6 + q^5 + 2*q^4"
    assert PolyQ().render() == "0"
    assert PolyQ({0: -3, 1: 1}).render() == "q - 3"


@given(small_polys, small_polys)
def test_divmod(f, g):
    if not g:
        return
    quo, rem = f.divmod(g)
    assert quo * g + rem == f
    assert rem.degree() < g.degree() or not rem


def test_exact_div_raises_on_remainder():
    with pytest.raises(ValueError):
        PolyQ({1: 1, 0: 1}).exact_div(PolyQ({1: 1}))


def test_is_integral_and_nonneg():
    assert PolyQ({2: 1, 0: 3}).is_integral()
    assert not PolyQ({1: Fraction(1, 2)}).is_integral()
    assert PolyQ({2: 1}).is_nonneg()
    assert not PolyQ({2: -1}).is_nonneg()


def test_ratq_arithmetic():
    q = PolyQ.q(1)
    half = RatQ(q - 1, q * 2 - 2)  # (q-1)/(2q-2) = 1/2
    assert half + half == RatQ(1)
    assert RatQ(q, q) == RatQ(1)
    assert (RatQ(1, q) * RatQ(q * q)).as_polyq() == q


def test_series_matches_geometric():
    gf = closed_form(2)  # 1 / ((1-qt)(1-q^2 t))
    series = gf.series(4)
    # k-th coefficient is sum_{i<=k} q^i q^{2(k-i)}
    assert series[1] == PolyQ.q(1) + PolyQ.q(2)
    assert series[2] == PolyQ.q(2) + PolyQ.q(3) + PolyQ.q(4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_verify_closed_form_small(n):
    assert verify_closed_form(n, 10).ok
