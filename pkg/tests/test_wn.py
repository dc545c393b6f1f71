from fractions import Fraction
from math import comb

import pytest
import sympy
from hypothesis import given, strategies as st

from unitcount import wn
from unitcount.wn import (
    Form,
    X,
    Y,
    Z,
    cn_compute,
    cn_determinant,
    cn_mod_p_window,
    cn_window,
    generalized_binomial,
    syzygy_terms,
    wn_antisymmetry_check,
    wn_build,
    wn_special_value,
    wn_syzygy_check,
)

sx, sy = sympy.symbols("x y")
sz = -sx - sy


def sym_wn(N, a, b):
    return sum(comb(2 * N - m, N - m) * comb(N + m, m) * a ** (N - m) * (-b) ** m for m in range(N + 1))


def test_build_examples():
    assert wn_build(0).coeffs == (1,)
    assert wn_build(1).coeffs == (2, -2)
    assert wn_build(2).coeffs == (6, -9, 6)
    with pytest.raises(ValueError):
        wn_build(-1)


@pytest.mark.parametrize("N", range(41))
def test_two_constructions_agree(N):
    assert wn._wn_coeffs_incremental(N) == wn_build(N).coeffs


@pytest.mark.parametrize("N", [1, 2, 3, 5])
def test_build_matches_symbolic(N):
    poly = sympy.Poly(sym_wn(N, sx, sy), sx, sy)
    expect = tuple(int(poly.coeff_monomial(sx ** (N - m) * sy ** m)) for m in range(N + 1))
    assert wn_build(N).coeffs == expect


def test_form_arithmetic():
    assert (X + Y).coeffs == (1, 1)
    assert (X * Y).coeffs == (0, 1, 0)
    assert ((X + Y) ** 2).coeffs == (1, 2, 1)
    assert (Z * Z).coeffs == (1, 2, 1)
    assert Form((1, 2, 1)).divide_exact(X + Y) == X + Y
    with pytest.raises(ArithmeticError):
        Form((1, 0, 1)).divide_exact(X + Y)
    assert Form((2, -2))(2, -1) == 6


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(0, 6))
def test_substitute_matches_evaluation(x, y, N):
    W = wn_build(N).as_form()
    assert W.substitute(Y, Z)(x, y) == W(y, -x - y)
    assert W.substitute(Z, X)(x, y) == W(-x - y, x)


@pytest.mark.parametrize("N", range(1, 21))
def test_antisymmetry(N):
    assert wn_antisymmetry_check(N)


@pytest.mark.parametrize("N", range(1, 21))
def test_syzygy(N):
    assert wn_syzygy_check(N)


def test_syzygy_spot_value():
    a, b, c = syzygy_terms(1)
    assert (a(1, 1), b(1, 1), c(1, 1)) == (6, -6, 0)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_syzygy_symbolic_oracle(N):
    e = 2 * N + 1
    total = sx ** e * sym_wn(N, sy, sz) + sy ** e * sym_wn(N, sz, sx) + sz ** e * sym_wn(N, sx, sy)
    assert sympy.expand(total) == 0


def test_broken_form_fails_syzygy():
    # perturbing W_1 must break the identity, so the check is not vacuous
    W = Form((2, -1))
    e = 3
    total = X ** e * W.substitute(Y, Z) + Y ** e * W.substitute(Z, X) + Z ** e * W
    assert not total.is_zero()


def test_c1_and_determinant_value():
    assert abs(cn_compute(1)) == 24
    assert cn_compute(1) == 24
    det = cn_determinant(1)
    value = det(2, -1)
    assert abs(value) == 576
    assert abs(value) == 2 * wn_special_value(1) * wn_special_value(2)


def test_c1_symbolic_oracle():
    N = 1
    e = 2 * N + 1
    det = (sz ** e * sym_wn(N, sx, sy) * sy ** (e + 2) * sym_wn(N + 1, sz, sx)
           - sy ** e * sym_wn(N, sz, sx) * sz ** (e + 2) * sym_wn(N + 1, sx, sy))
    q = sympy.cancel(det / ((sx * sy * sz) ** e * (sx ** 2 + sx * sy + sy ** 2)))
    assert q == cn_compute(1)


@pytest.mark.parametrize("N", range(1, 16))
def test_cn_nonzero(N):
    assert cn_compute(N) != 0


def test_cn_pinned_values():
    assert [cn_compute(N) for N in (1, 2, 3)] == [24, -420, 8400]
    with pytest.raises(ValueError):
        cn_compute(0)


def test_special_value_examples():
    assert [wn_special_value(N) for N in range(3)] == [1, 6, 48]
    assert generalized_binomial(Fraction(3, 2), 2) == Fraction(3, 8)


def test_special_value_monotone():
    vals = [wn_special_value(N) for N in range(41)]
    assert all(v > 0 for v in vals)
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_windows():
    assert cn_window(7) == []
    assert cn_mod_p_window(7).passed and cn_mod_p_window(7).table == []
    rep = cn_mod_p_window(11)
    assert rep.table == [(1, 2)] and rep.passed
    rep = cn_mod_p_window(97)
    assert [n for n, _ in rep.table] == list(range(1, 31)) and rep.passed
    with pytest.raises(ValueError):
        cn_mod_p_window(2)
