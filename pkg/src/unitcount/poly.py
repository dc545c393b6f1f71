"""Polynomials over F_q and the rational function field F_q(t).

Coefficients are field codes (see :mod:`unitcount.ff`), stored low-to-high
in a tuple with no trailing zeros.  ``RatFunc`` is always reduced with a
monic denominator, so structural equality is field equality.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .ff import FieldElem, FieldSpec

FACTOR_SEED = 20240229


def set_factor_seed(seed: int) -> None:
    global FACTOR_SEED
    FACTOR_SEED = seed
    _factor_cached.cache_clear()


class Poly:
    __slots__ = ("field", "c")

    def __init__(self, field: FieldSpec, coeffs=()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "c", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.field, self.c))

    @classmethod
    def const(cls, field, a: int) -> "Poly":
        return cls(field, (a,))

    @classmethod
    def t(cls, field) -> "Poly":
        return cls(field, (0, 1))

    @classmethod
    def from_ints(cls, field, ints) -> "Poly":
        return cls(field, [field.from_int(i) for i in ints])

    @property
    def coeffs(self) -> list[FieldElem]:
        return [FieldElem(self.field, a) for a in self.c]

    @property
    def deg(self) -> int:
        return len(self.c) - 1

    @property
    def lead(self) -> int:
        return self.c[-1]

    def is_zero(self) -> bool:
        return not self.c

    def is_one(self) -> bool:
        return self.c == (1,)

    def is_const(self) -> bool:
        return len(self.c) <= 1

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.c == other.c

    def __hash__(self):
        return hash((self.field.p, self.field.k, self.c))

    def __bool__(self):
        return bool(self.c)

    # --- ring operations

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.c, other.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        if F.k == 1:
            p = F.p
            for i, bi in enumerate(b):
                out[i] = (out[i] + bi) % p
        else:
            for i, bi in enumerate(b):
                out[i] = F.add(out[i], bi)
        return Poly(F, out)

    def __neg__(self) -> "Poly":
        F = self.field
        return Poly(F, [F.neg(a) for a in self.c])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        a, b = self.c, other.c
        if not a or not b:
            return Poly(F)
        if F.k == 1:
            p = F.p
            out = [0] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return Poly(F, [x % p for x in out])
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = F.add(out[i + j], F.mul(ai, bj))
        return Poly(F, out)

    def scale(self, s: int) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(a, s) for a in self.c])

    def shift(self, n: int) -> "Poly":
        if not self.c:
            return self
        return Poly(self.field, (0,) * n + self.c)

    def monic(self) -> "Poly":
        if not self.c or self.c[-1] == 1:
            return self
        return self.scale(self.field.inv(self.c[-1]))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        F = self.field
        if not other.c:
            raise ZeroDivisionError("polynomial division by zero")
        b = other.c
        db = len(b) - 1
        r = list(self.c)
        if len(r) - 1 < db:
            return Poly(F), self
        q = [0] * (len(r) - db)
        inv = F.inv(b[-1])
        if F.k == 1:
            p = F.p
            for i in range(len(r) - 1, db - 1, -1):
                ci = r[i] * inv % p
                if ci:
                    q[i - db] = ci
                    off = i - db
                    for j in range(db + 1):
                        r[off + j] = (r[off + j] - ci * b[j]) % p
        else:
            for i in range(len(r) - 1, db - 1, -1):
                ci = F.mul(r[i], inv)
                if ci:
                    q[i - db] = ci
                    off = i - db
                    for j in range(db + 1):
                        r[off + j] = F.sub(r[off + j], F.mul(ci, b[j]))
        return Poly(F, q), Poly(F, r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r.c:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(self.field, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e: int, m: "Poly") -> "Poly":
        result = Poly.const(self.field, 1) % m
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            base = (base * base) % m
            e >>= 1
        return result

    def deriv(self) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(F.from_int(i), a) for i, a in enumerate(self.c)][1:])

    def frobenius(self) -> "Poly":
        """f(t)^p, computed coefficientwise as sum a_i^p t^(ip)."""
        F = self.field
        p = F.p
        out = [0] * (p * (len(self.c) - 1) + 1) if self.c else []
        for i, a in enumerate(self.c):
            out[i * p] = F.pow(a, p)
        return Poly(F, out)

    def pth_root(self) -> "Poly | None":
        """g with g^p = self, or None when self is not a p-th power in F_q[t]."""
        F = self.field
        p = F.p
        if any(a for i, a in enumerate(self.c) if i % p):
            return None
        return Poly(F, [F.pth_root(a) for a in self.c[::p]])

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for a in reversed(self.c):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def sort_key(self):
        return (self.deg, self.c)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)} over F_{self.field.q})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while b.c:
        a, b = b, a % b
    return a.monic()


def format_poly(f: Poly, var: str = "t") -> str:
    F = f.field
    if not f.c:
        return "0"
    terms = []
    for i in range(len(f.c) - 1, -1, -1):
        a = f.c[i]
        if a == 0:
            continue
        cs = F.format(a)
        if F.k > 1 and "+" in cs and i > 0:
            cs = f"({cs})"
        mon = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mon:
            terms.append(cs)
        elif a == 1:
            terms.append(mon)
        else:
            terms.append(f"{cs}*{mon}")
    return "+".join(terms)


# --- factorization


def _sqf(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition of a monic f, valid in characteristic p."""
    F = f.field
    p = F.p
    one = Poly.const(F, 1)
    out = []
    if f.is_const():
        return out
    d = f.deriv()
    if not d.c:
        g = f.pth_root()
        return [(h, m * p) for h, m in _sqf(g)]
    c = poly_gcd(f, d)
    w = f.exact_div(c)
    i = 1
    while w != one:
        y = poly_gcd(w, c)
        z = w.exact_div(y)
        if z != one:
            out.append((z, i))
        i += 1
        w = y
        c = c.exact_div(y)
    if c != one:
        g = c.pth_root()
        out.extend((h, m * p) for h, m in _sqf(g))
    return out


def _ddf(f: Poly) -> list[tuple[Poly, int]]:
    """Distinct-degree factorization of a monic squarefree f."""
    F = f.field
    one = Poly.const(F, 1)
    t = Poly.t(F)
    out = []
    i = 1
    rest = f
    h = t % rest
    while rest.deg >= 2 * i:
        h = h.powmod(F.q, rest)
        g = poly_gcd(rest, h - t)
        if g != one:
            out.append((g, i))
            rest = rest.exact_div(g)
            h = h % rest
        i += 1
    if rest != one:
        out.append((rest, rest.deg))
    return out


def _random_poly(F: FieldSpec, n: int, rng: random.Random) -> Poly:
    return Poly(F, [rng.randrange(F.q) for _ in range(n)])


def _edf(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus equal-degree splitting of f into degree-d factors."""
    F = f.field
    one = Poly.const(F, 1)
    n = f.deg
    if n == d:
        return [f]
    while True:
        a = _random_poly(F, n, rng)
        if a.is_const():
            continue
        if F.p == 2:
            # trace map from F_{q^d} down to F_2
            b = a % f
            acc = b
            for _ in range(F.k * d - 1):
                b = (b * b) % f
                acc = acc + b
        else:
            acc = a.powmod((F.q ** d - 1) // 2, f) - one
        g = poly_gcd(f, acc)
        if g != one and g.deg < n:
            return _edf(g, d, rng) + _edf(f.exact_div(g), d, rng)


@lru_cache(maxsize=4096)
def _factor_cached(f: Poly) -> tuple[tuple[Poly, int], ...]:
    F = f.field
    rng = random.Random(hash((FACTOR_SEED, F.p, F.k, f.c)))
    counts: dict[Poly, int] = {}
    for sq, m in _sqf(f):
        for part, d in _ddf(sq):
            for irr in _edf(part, d, rng):
                irr = irr.monic()
                counts[irr] = counts.get(irr, 0) + m
    return tuple(sorted(counts.items(), key=lambda kv: kv[0].sort_key()))


def poly_factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, sorted by (degree, coefficients).

    The leading coefficient of ``f`` is not part of the output.
    """
    if not f.c:
        raise ValueError("cannot factor the zero polynomial")
    return list(_factor_cached(f.monic()))


def is_irreducible(f: Poly) -> bool:
    if f.deg < 1:
        return False
    fs = poly_factor(f)
    return len(fs) == 1 and fs[0][1] == 1


# --- rational functions


class RatFunc:
    """Element num/den of F_q(t) with gcd(num, den) = 1 and den monic."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduced: bool = False):
        F = num.field
        if den is None:
            den = Poly.const(F, 1)
        if not den.c:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.field != den.field:
            raise ValueError("numerator and denominator over different fields")
        if not reduced:
            if not num.c:
                den = Poly.const(F, 1)
            else:
                g = poly_gcd(num, den)
                if not g.is_one():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lead
            if lc != 1:
                inv = F.inv(lc)
                num = num.scale(inv)
                den = den.scale(inv)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __reduce__(self):
        return (_ratfunc_unpickle, (self.num, self.den))

    @property
    def field(self) -> FieldSpec:
        return self.num.field

    @classmethod
    def const(cls, field, a: int) -> "RatFunc":
        return cls(Poly.const(field, a), reduced=True)

    @classmethod
    def one(cls, field) -> "RatFunc":
        return cls.const(field, 1)

    @classmethod
    def t(cls, field) -> "RatFunc":
        return cls(Poly.t(field), reduced=True)

    @classmethod
    def parse(cls, text: str, field: FieldSpec) -> "RatFunc":
        return parse_ratfunc(text, field)

    def is_zero(self) -> bool:
        return not self.num.c

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_one()

    def const_value(self) -> int:
        if not self.is_const():
            raise ValueError(f"{self} is not a constant")
        return self.num.c[0] if self.num.c else 0

    def __eq__(self, other):
        return isinstance(other, RatFunc) and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num.c)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        d1 = self.den.exact_div(g)
        d2 = other.den.exact_div(g)
        return RatFunc(self.num * d2 + other.num * d1, d1 * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        if not self.num.c or not other.num.c:
            return RatFunc(Poly(self.field), reduced=True)
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        a, d = self.num, other.den
        if not g1.is_one():
            a, d = a.exact_div(g1), d.exact_div(g1)
        c, b = other.num, self.den
        if not g2.is_one():
            c, b = c.exact_div(g2), b.exact_div(g2)
        num = a * c
        den = b * d
        lc = den.lead
        if lc != 1:
            inv = self.field.inv(lc)
            num, den = num.scale(inv), den.scale(inv)
        return RatFunc(num, den, reduced=True)

    def scale(self, s: int) -> "RatFunc":
        return RatFunc(self.num.scale(s), self.den, reduced=True)

    def inverse(self) -> "RatFunc":
        if not self.num.c:
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        return self * other.inverse()

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            if not self.num.c:
                raise ZeroDivisionError("zero to a negative power")
            return RatFunc(self.den ** (-e), self.num ** (-e))
        # coprimality is preserved by powers
        return RatFunc(self.num ** e, self.den ** e, reduced=True)

    def frobenius(self) -> "RatFunc":
        return RatFunc(self.num.frobenius(), self.den.frobenius(), reduced=True)

    def __str__(self):
        return format_ratfunc(self)

    def __repr__(self):
        return f"RatFunc({format_ratfunc(self)} over F_{self.field.q})"


def _ratfunc_unpickle(num, den):
    return RatFunc(num, den, reduced=True)


def format_ratfunc(x: RatFunc) -> str:
    num = format_poly(x.num)
    if x.den.is_one():
        return num
    den = format_poly(x.den)
    if "+" in num:
        num = f"({num})"
    if "+" in den or "*" in den or "^" in den:
        den = f"({den})"
    return f"{num}/{den}"


def rat_arith(x: RatFunc, y: RatFunc, op: str) -> RatFunc:
    if x.field != y.field:
        raise ValueError("rational functions over different fields")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown op {op!r}")


def rat_pow(x: RatFunc, e: int) -> RatFunc:
    return x ** e


def rat_pth_root(x: RatFunc) -> RatFunc | None:
    """y with y^p = x, or None if x is not in K^p."""
    if x.is_zero():
        raise ValueError("p-th root of zero is not defined here")
    num_root = x.num.pth_root()
    if num_root is None:
        return None
    den_root = x.den.pth_root()
    if den_root is None:
        return None
    return RatFunc(num_root, den_root, reduced=True)


def in_Kp(x: RatFunc) -> bool:
    return rat_pth_root(x) is not None


# --- text syntax: integers, t, u (generator of F_q over F_p), + - * / ^ ( )


class ParseError(ValueError):
    pass


def _tokenize(text: str):
    i = 0
    out = []
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "tu":
            out.append(("var", ch, i))
            i += 1
        elif ch in "+-*/^()":
            out.append(("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at column {i + 1} in {text!r}")
    return out


class _Parser:
    def __init__(self, text: str, field: FieldSpec):
        self.text = text
        self.F = field
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, val=None):
        tok = self.peek()
        if tok is None or (val is not None and tok[1] != val):
            where = f"column {tok[2] + 1}" if tok else "end of input"
            raise ParseError(f"expected {val or 'a term'} at {where} in {self.text!r}")
        self.i += 1
        return tok

    def parse(self) -> RatFunc:
        if not self.toks:
            raise ParseError("empty expression")
        x = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input at column {self.peek()[2] + 1} in {self.text!r}")
        return x

    def expr(self):
        x = self.term()
        while (tok := self.peek()) and tok[1] in ("+", "-") and tok[0] == "op":
            self.i += 1
            y = self.term()
            x = x + y if tok[1] == "+" else x - y
        return x

    def term(self):
        x = self.unary()
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in ("*", "/"):
            self.i += 1
            y = self.unary()
            if tok[1] == "*":
                x = x * y
            else:
                if y.is_zero():
                    raise ParseError(f"division by zero in {self.text!r}")
                x = x / y
        return x

    def unary(self):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.i += 1
            x = self.unary()
            return -x if tok[1] == "-" else x
        return self.power()

    def power(self):
        x = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.i += 1
            sign = 1
            if (s := self.peek()) and s[0] == "op" and s[1] == "-":
                self.i += 1
                sign = -1
            e = self.take()
            if e[0] != "int":
                raise ParseError(f"exponent must be an integer at column {e[2] + 1} in {self.text!r}")
            if x.is_zero() and sign < 0:
                raise ParseError(f"zero to a negative power in {self.text!r}")
            x = x ** (sign * e[1])
        return x

    def atom(self):
        tok = self.take()
        F = self.F
        if tok[0] == "int":
            return RatFunc.const(F, F.from_int(tok[1]))
        if tok[0] == "var":
            if tok[1] == "t":
                return RatFunc.t(F)
            if F.k == 1:
                raise ParseError(f"'u' names the generator of F_q and needs k > 1 ({self.text!r})")
            return RatFunc.const(F, F.p)  # code p is the digit vector (0, 1, 0, ...)
        if tok[1] == "(":
            x = self.expr()
            self.take(")")
            return x
        raise ParseError(f"unexpected {tok[1]!r} at column {tok[2] + 1} in {self.text!r}")


def parse_ratfunc(text: str, field: FieldSpec) -> RatFunc:
    return _Parser(str(text), field).parse()
