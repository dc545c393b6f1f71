"""Finite fields F_p and F_q = F_p[u]/(m(u)).

Elements are stored as a single integer code: the coefficient vector
(c_0, ..., c_{k-1}) of c_0 + c_1 u + ... is packed as sum c_i p^i.  For
k = 1 the code is the residue itself and all arithmetic is plain modular
integer arithmetic.  For k > 1 multiplication and addition go through
discrete-log and Zech-log tables built once per field.
"""

from __future__ import annotations

from functools import cached_property

MAX_P = 1 << 20
MAX_Q = 1 << 16


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- dense polynomials over F_p as lists, low-to-high; only used to
# validate moduli and to bootstrap the log tables.

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, m, p):
    a = list(a)
    inv = pow(m[-1], -1, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        if c:
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mi) % p
        a.pop()
        _trim(a)
    return _trim(a)


def _pmulmod(a, b, m, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _pmod([c % p for c in out], m, p)


def _ppowmod(a, e, m, p):
    result = [1]
    base = _pmod(a, m, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, m, p)
        base = _pmulmod(base, base, m, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def _is_irreducible(m, p):
    k = len(m) - 1
    x = [0, 1]
    h = x
    for _ in range(k // 2):
        h = _ppowmod(h, p, m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, _trim(diff), p)) > 1:
            return False
    return True


class FieldSpec:
    """The finite field F_q with q = p^k, given by a monic irreducible modulus.

    ``modulus`` is the low-to-high coefficient list of a monic irreducible
    polynomial of degree k over F_p.  It is ignored (and may be omitted)
    when k = 1.
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p) or p >= MAX_P:
            raise FieldError(f"p={p} is not a prime below {MAX_P}")
        if k < 1:
            raise FieldError(f"extension degree k={k} must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        if k == 1:
            self.modulus = (0, 1)
        else:
            if modulus is None:
                raise FieldError("a modulus is required when k > 1")
            m = tuple(int(c) % p for c in modulus)
            if len(m) != k + 1 or m[-1] != 1:
                raise FieldError(f"modulus {list(modulus)} is not monic of degree {k}")
            if not _is_irreducible(list(m), p):
                raise FieldError(f"modulus {list(modulus)} is reducible over F_{p}")
            if self.q > MAX_Q:
                raise FieldError(f"q={self.q} exceeds {MAX_Q}")
            self.modulus = m

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.k == 1:
            return f"FieldSpec(p={self.p})"
        return f"FieldSpec(p={self.p}, k={self.k}, modulus={list(self.modulus)})"

    def __reduce__(self):
        return (FieldSpec, (self.p, self.k, self.modulus if self.k > 1 else None))

    # --- code <-> coefficient vectors

    def digits(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_digits(self, ds) -> int:
        a = 0
        for d in reversed(list(ds)):
            a = a * self.p + int(d) % self.p
        return a

    def from_int(self, n: int) -> int:
        return n % self.p

    # --- log tables (k > 1)

    @cached_property
    def _tables(self):
        p, q, m = self.p, self.q, list(self.modulus)
        order = q - 1
        primes = prime_factors(order)
        gen = None
        for cand in range(p, q):
            g = list(self.digits(cand))
            _trim(g)
            if all(_ppowmod(g, order // ell, m, p) != [1] for ell in primes):
                gen = g
                break
        exp = [0] * order
        log = [0] * q
        cur = [1]
        for i in range(order):
            code = self.from_digits(cur + [0] * (self.k - len(cur)))
            exp[i] = code
            log[code] = i
            cur = _pmulmod(cur, gen, m, p)
        # zech[d] = log(1 + g^d), or -1 when 1 + g^d = 0
        zech = [0] * order
        for d in range(order):
            ds = list(self.digits(exp[d]))
            ds[0] = (ds[0] + 1) % p
            s = self.from_digits(ds)
            zech[d] = -1 if s == 0 else log[s]
        return exp, log, zech

    # --- raw arithmetic on codes

    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        exp, log, zech = self._tables
        n = self.q - 1
        la = log[a]
        z = zech[(log[b] - la) % n]
        return 0 if z < 0 else exp[(la + z) % n]

    def neg(self, a: int) -> int:
        if self.k == 1:
            return (-a) % self.p
        if a == 0 or self.p == 2:
            return a
        exp, log, _ = self._tables
        n = self.q - 1
        return exp[(log[a] + n // 2) % n]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        exp, log, _ = self._tables
        return exp[(log[a] + log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, -1, self.p)
        exp, log, _ = self._tables
        return exp[(-log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero to a negative power")
            return 1 if e == 0 else 0
        if self.k == 1:
            return pow(a, e, self.p)
        exp, log, _ = self._tables
        return exp[(log[a] * e) % (self.q - 1)]

    def pth_root(self, a: int) -> int:
        # Frobenius has order k on F_q, so its inverse is x -> x^(p^(k-1)).
        if self.k == 1:
            return a
        return self.pow(a, self.p ** (self.k - 1))

    def units(self) -> list[int]:
        if self.q > MAX_Q:
            raise FieldError(f"q={self.q} too large to enumerate")
        return list(range(1, self.q))

    def format(self, a: int) -> str:
        if self.k == 1:
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.digits(a)))):
            if c == 0:
                continue
            mon = "" if i == 0 else ("u" if i == 1 else f"u^{i}")
            if not mon:
                terms.append(str(c))
            elif c == 1:
                terms.append(mon)
            else:
                terms.append(f"{c}*{mon}")
        return "+".join(terms) if terms else "0"

    def elem(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.spec != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, int):
            return FieldElem(self, self.from_int(value))
        return FieldElem(self, self.from_digits(value))


class FieldElem:
    """An immutable element of a FieldSpec."""

    __slots__ = ("spec", "code")

    def __init__(self, spec: FieldSpec, code: int):
        if not 0 <= code < spec.q:
            raise FieldError(f"code {code} out of range for {spec!r}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "code", code)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def __reduce__(self):
        return (FieldElem, (self.spec, self.code))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.spec.digits(self.code)

    def _other(self, b):
        if isinstance(b, int):
            return self.spec.from_int(b)
        if not isinstance(b, FieldElem):
            return NotImplemented
        if b.spec != self.spec:
            raise FieldError(f"mismatched fields {self.spec!r} and {b.spec!r}")
        return b.code

    def __eq__(self, b):
        if isinstance(b, FieldElem):
            return self.spec == b.spec and self.code == b.code
        if isinstance(b, int):
            return self.code == self.spec.from_int(b)
        return NotImplemented

    def __hash__(self):
        return hash((self.spec, self.code))

    def __bool__(self):
        return self.code != 0

    def __add__(self, b):
        c = self._other(b)
        return c if c is NotImplemented else FieldElem(self.spec, self.spec.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, b):
        c = self._other(b)
        return c if c is NotImplemented else FieldElem(self.spec, self.spec.sub(self.code, c))

    def __rsub__(self, b):
        c = self._other(b)
        return c if c is NotImplemented else FieldElem(self.spec, self.spec.sub(c, self.code))

    def __neg__(self):
        return FieldElem(self.spec, self.spec.neg(self.code))

    def __mul__(self, b):
        c = self._other(b)
        return c if c is NotImplemented else FieldElem(self.spec, self.spec.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, b):
        c = self._other(b)
        if c is NotImplemented:
            return c
        return FieldElem(self.spec, self.spec.mul(self.code, self.spec.inv(c)))

    def __pow__(self, e: int):
        return FieldElem(self.spec, self.spec.pow(self.code, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.spec, self.spec.inv(self.code))

    def __repr__(self):
        return f"FieldElem({self.spec.format(self.code)} in F_{self.spec.q})"

    def __str__(self):
        return self.spec.format(self.code)


def ff_arith(a: FieldElem, b: FieldElem, op: str) -> FieldElem:
    if a.spec != b.spec:
        raise FieldError(f"mismatched fields {a.spec!r} and {b.spec!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown op {op!r}")


def ff_pth_root(a: FieldElem) -> FieldElem:
    return FieldElem(a.spec, a.spec.pth_root(a.code))


def ff_unit_enum(spec: FieldSpec) -> list[FieldElem]:
    return [FieldElem(spec, c) for c in spec.units()]
