import pytest
from hypothesis import given, strategies as st

from unitcount.places import (
    Place,
    PreconditionError,
    cross_height_check,
    height_hom,
    height_hom_by_places,
    height_point,
    support,
    valuation,
)
from unitcount.poly import RatFunc, parse_ratfunc

from conftest import F4, F5, ratfuncs


def P(text, F=F5):
    return parse_ratfunc(text, F)


def place(text, F=F5):
    return Place(P(text, F).num)


INF = Place.infinite()


def test_valuation_examples():
    assert valuation(P("t"), place("t")) == 1
    assert valuation(P("t"), INF) == -1
    assert valuation(P("(t+1)^2/t"), place("t+1")) == 2
    assert valuation(P("(t+1)^2/t"), place("t")) == -1
    with pytest.raises(ValueError):
        valuation(P("0"), INF)


def test_place_rejects_reducible():
    with pytest.raises(ValueError):
        Place(P("t^2+5*t+6").num)
    with pytest.raises(ValueError):
        Place(P("2*t").num)


def test_support_examples():
    assert support(P("1")) == {}
    assert support(P("3")) == {}
    assert support(P("t")) == {place("t"): 1, INF: -1}
    got = support(P("(t^2+1)/t"))
    assert got == {place("t"): -1, place("t+2"): 1, place("t+3"): 1, INF: -1}
    assert list(got) == [place("t"), place("t+2"), place("t+3"), INF]


def test_support_with_higher_degree_place():
    x = P("(t^2+2)/(t+1)^3")  # t^2 + 2 is irreducible mod 5
    s = support(x)
    assert s[place("t^2+2")] == 1 and place("t^2+2").degree == 2
    assert s[INF] == 1
    assert sum(v * pl.degree for pl, v in s.items()) == 0


@pytest.mark.parametrize("F", [F5, F4])
@given(data=st.data())
def test_sum_formula(F, data):
    x = data.draw(ratfuncs(F, 6))
    assert sum(v * pl.degree for pl, v in support(x).items()) == 0


def test_height_examples():
    assert height_hom([P("1"), P("1"), P("1")]) == 0
    assert height_hom([P("1"), P("t")]) == 1
    assert height_hom([P("t"), P("t^2")]) == 1
    assert height_point(P("t"), P("1-t")) == 1
    assert height_point(P("2"), P("4")) == 0
    assert height_point(P("t^5"), P("(1-t)^5")) == 5
    assert height_hom([P("0"), P("t")]) == 0
    with pytest.raises(ValueError):
        height_hom([P("0"), P("0")])


@pytest.mark.parametrize("F", [F5, F4])
@given(data=st.data())
def test_height_routes_agree(F, data):
    coords = data.draw(st.lists(ratfuncs(F, 4, nonzero=False), min_size=1, max_size=4))
    if all(c.is_zero() for c in coords):
        coords.append(RatFunc.one(F))
    assert height_hom(coords) == height_hom_by_places(coords)


@given(ratfuncs(F5, 4), st.lists(ratfuncs(F5, 4), min_size=1, max_size=3))
def test_height_scaling_invariance(lam, coords):
    assert height_hom([lam * c for c in coords]) == height_hom(coords)


@given(ratfuncs(F5, 3), ratfuncs(F5, 3))
def test_frobenius_scales_height(x, y):
    assert height_point(x ** 5, y ** 5) == 5 * height_point(x, y)


@given(ratfuncs(F5, 3), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_height_zero_on_constant_points(lam, consts):
    if not any(consts):
        consts[0] = 1
    pt = [lam * RatFunc.const(F5, c) for c in consts]
    assert height_hom(pt) == 0


@given(st.lists(ratfuncs(F5, 3, nonzero=False), min_size=2, max_size=3))
def test_height_zero_only_on_constant_points(coords):
    if all(c.is_zero() for c in coords):
        return
    ref = next(c for c in coords if not c.is_zero())
    constant = all((c / ref).is_const() for c in coords)
    assert (height_hom(coords) == 0) == constant


def test_cross_height_on_quotient_of_frobenius_pair():
    u = (P("t"), P("1-t"))
    v = (P("t^5"), P("(1-t)^5"))
    a = (u[0], u[1], P("-1"))
    w1 = (P("1"), P("1"), P("1"))
    w2 = (v[0] / u[0], v[1] / u[1], P("1"))
    assert cross_height_check(a, w1, w2)


def test_cross_height_with_cross_product():
    w1 = (P("1"), P("t"), P("t^2+1"))
    w2 = (P("t"), P("1"), P("3"))
    x1, y1, z1 = w1
    x2, y2, z2 = w2
    a = (y1 * z2 - y2 * z1, z1 * x2 - x1 * z2, x1 * y2 - x2 * y1)
    assert cross_height_check(a, w1, w2)


def test_cross_height_preconditions():
    w1 = (P("1"), P("t"), P("t^2"))
    a = (P("t"), P("-1"), P("0"))
    with pytest.raises(PreconditionError, match="dependent"):
        cross_height_check(a, w1, w1)
    with pytest.raises(PreconditionError, match="zero"):
        cross_height_check((P("0"),) * 3, w1, (P("1"), P("1"), P("1")))
    with pytest.raises(PreconditionError, match="orthogonal"):
        cross_height_check((P("1"), P("1"), P("1")), w1, (P("1"), P("2"), P("1")))


@given(ratfuncs(F5, 3), ratfuncs(F5, 3), ratfuncs(F5, 3), ratfuncs(F5, 3), ratfuncs(F5, 3), ratfuncs(F5, 3))
def test_cross_height_fuzz(x1, y1, z1, x2, y2, z2):
    w1, w2 = (x1, y1, z1), (x2, y2, z2)
    a = (y1 * z2 - y2 * z1, z1 * x2 - x1 * z2, x1 * y2 - x2 * y1)
    if all(c.is_zero() for c in a):
        return
    assert cross_height_check(a, w1, w2)
