"""The integer binary forms W_N(X, Y) and their identities.

Every polynomial that occurs here is homogeneous in (X, Y), including
those obtained by substituting Z = -X - Y, so a form of degree d is stored
densely as d + 1 integers: index m holds the coefficient of X^(d-m) Y^m.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class Form:
    """Homogeneous form of a fixed degree with big-integer coefficients."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, o: "Form") -> "Form":
        if self.is_zero():
            return o
        if o.is_zero():
            return self
        if o.degree != self.degree:
            raise ValueError("adding forms of different degrees")
        return Form(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self) -> "Form":
        return Form(tuple(-a for a in self.coeffs))

    def __sub__(self, o: "Form") -> "Form":
        return self + (-o)

    def __mul__(self, o: "Form") -> "Form":
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Form(tuple(out))

    def __pow__(self, e: int) -> "Form":
        result = Form((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x: int, y: int):
        d = self.degree
        return sum(c * x ** (d - m) * y ** m for m, c in enumerate(self.coeffs))

    def substitute(self, lx: "Form", ly: "Form") -> "Form":
        """f(lx, ly) for forms lx, ly of equal degree."""
        d = self.degree
        px = [Form((1,))]
        py = [Form((1,))]
        for _ in range(d):
            px.append(px[-1] * lx)
            py.append(py[-1] * ly)
        out = Form((0,) * (d * lx.degree + 1))
        for m, c in enumerate(self.coeffs):
            if c:
                term = px[d - m] * py[m]
                out = out + Form(tuple(c * a for a in term.coeffs))
        return out

    def divide_exact(self, g: "Form") -> "Form":
        """Quotient f / g in Z[X, Y]; raises ArithmeticError when g does not divide f."""
        a = list(self.coeffs)
        b = list(g.coeffs)
        if not any(b):
            raise ZeroDivisionError("division by the zero form")
        if not any(a):
            return Form((0,) * (len(a) - len(b) + 1))
        # leading zeros of b are powers of Y, trailing zeros powers of X
        lo = next(i for i, c in enumerate(b) if c)
        hi = len(b) - next(i for i, c in enumerate(reversed(b)) if c)
        if any(a[:lo]) or any(a[len(a) - (len(b) - hi):]):
            raise ArithmeticError("inexact division of forms")
        a = a[lo:len(a) - (len(b) - hi)]
        b = b[lo:hi]
        q = [0] * (len(a) - len(b) + 1)
        if len(q) <= 0:
            raise ArithmeticError("inexact division of forms")
        for i in range(len(q)):
            c, rem = divmod(a[i], b[0])
            if rem:
                raise ArithmeticError("inexact division of forms")
            q[i] = c
            if c:
                for j, bj in enumerate(b):
                    a[i + j] -= c * bj
        if any(a):
            raise ArithmeticError("inexact division of forms")
        return Form(tuple(q))


X = Form((1, 0))
Y = Form((0, 1))
Z = Form((-1, -1))  # Z = -X - Y


@dataclass(frozen=True)
class WnForm:
    N: int
    coeffs: tuple[int, ...]  # coefficient of X^(N-m) Y^m at index m

    def as_form(self) -> Form:
        return Form(self.coeffs)

    def __call__(self, x, y):
        return self.as_form()(x, y)


def _wn_coeffs_direct(N: int) -> tuple[int, ...]:
    return tuple(comb(2 * N - m, N - m) * comb(N + m, m) * (-1) ** m for m in range(N + 1))


def _wn_coeffs_incremental(N: int) -> tuple[int, ...]:
    # step binom(2N-m, N-m) and binom(N+m, m) from m to m+1 by exact ratios
    a = comb(2 * N, N)
    b = 1
    out = []
    for m in range(N + 1):
        out.append(a * b * (-1) ** m)
        if m < N:
            a = a * (N - m) // (2 * N - m)
            b = b * (N + m + 1) // (m + 1)
    return tuple(out)


@lru_cache(maxsize=None)
def wn_build(N: int) -> WnForm:
    if N < 0:
        raise ValueError("N must be non-negative")
    return WnForm(N, _wn_coeffs_direct(N))


def wn_antisymmetry_check(N: int) -> bool:
    c = wn_build(N).coeffs
    s = (-1) ** N
    return tuple(reversed(c)) == tuple(s * a for a in c)


def syzygy_terms(N: int) -> tuple[Form, Form, Form]:
    """X^(2N+1) W_N(Y,Z), Y^(2N+1) W_N(Z,X), Z^(2N+1) W_N(X,Y) with Z = -X-Y."""
    W = wn_build(N).as_form()
    e = 2 * N + 1
    return (X ** e * W.substitute(Y, Z),
            Y ** e * W.substitute(Z, X),
            Z ** e * W)


def wn_syzygy_check(N: int) -> bool:
    a, b, c = syzygy_terms(N)
    return (a + b + c).is_zero()


def cn_determinant(N: int) -> Form:
    W0 = wn_build(N).as_form()
    W1 = wn_build(N + 1).as_form()
    e = 2 * N + 1
    top_left = Z ** e * W0
    top_right = Y ** e * W0.substitute(Z, X)
    bottom_left = Z ** (e + 2) * W1
    bottom_right = Y ** (e + 2) * W1.substitute(Z, X)
    return top_left * bottom_right - top_right * bottom_left


@lru_cache(maxsize=None)
def cn_compute(N: int) -> int:
    """The integer c_N with det(...) = c_N (XYZ)^(2N+1) (X^2 + XY + Y^2)."""
    if N < 1:
        raise ValueError("c_N is defined for N >= 1")
    det = cn_determinant(N)
    divisor = (X * Y * Z) ** (2 * N + 1) * Form((1, 1, 1))
    q = det.divide_exact(divisor)
    if q.degree != 0:
        raise ArithmeticError(f"quotient for N={N} is not a constant")
    c = q.coeffs[0]
    if c == 0:
        raise ArithmeticError(f"c_{N} vanishes")
    return c


def generalized_binomial(top: Fraction, n: int) -> Fraction:
    acc = Fraction(1)
    for i in range(n):
        acc = acc * (top - i) / (i + 1)
    return acc


def wn_special_value(N: int) -> int:
    """W_N(2, -1), checked against 4^N * binom(3N/2, N) in exact rationals."""
    value = wn_build(N)(2, -1)
    closed = 4 ** N * generalized_binomial(Fraction(3 * N, 2), N)
    if closed.denominator != 1:
        raise ArithmeticError(f"closed form for N={N} is not an integer: {closed}")
    if closed != value:
        raise ArithmeticError(f"W_{N}(2,-1) = {value} but closed form gives {closed}")
    return value


def cn_window(p: int) -> list[int]:
    """Positive N with N < p/3 - 2."""
    return [N for N in range(1, p) if 3 * N + 6 < p]


@dataclass
class WindowReport:
    p: int
    table: list[tuple[int, int]]  # (N, c_N mod p)

    @property
    def passed(self) -> bool:
        return all(r != 0 for _, r in self.table)


def cn_mod_p_window(p: int) -> WindowReport:
    if p % 2 == 0:
        raise ValueError("p must be odd")
    return WindowReport(p, [(N, cn_compute(N) % p) for N in cn_window(p)])
