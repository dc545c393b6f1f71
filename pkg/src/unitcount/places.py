"""Places of F_q(t), valuations, the sum formula and heights.

A place is either a monic irreducible polynomial or the infinite place,
whose valuation is deg(den) - deg(num).  Heights are exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .poly import Poly, RatFunc, format_poly, is_irreducible, poly_factor, poly_gcd


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


@dataclass(frozen=True)
class Place:
    poly: Poly | None  # None is the infinite place

    def __post_init__(self):
        if self.poly is not None:
            if self.poly.lead != 1 or not is_irreducible(self.poly):
                raise ValueError(f"{self.poly} is not monic irreducible")

    @classmethod
    def infinite(cls) -> "Place":
        return cls(None)

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.deg

    def sort_key(self):
        if self.poly is None:
            return (1, 0, ())
        return (0, self.poly.deg, self.poly.c)

    def __lt__(self, other: "Place"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        return "inf" if self.poly is None else format_poly(self.poly)


def _trusted_place(poly: Poly) -> Place:
    # factors coming out of poly_factor are already monic irreducible
    pl = object.__new__(Place)
    object.__setattr__(pl, "poly", poly)
    return pl


def _poly_order(f: Poly, pi: Poly) -> int:
    n = 0
    while True:
        q, r = f.divmod(pi)
        if r.c:
            return n
        f = q
        n += 1


def valuation(x: RatFunc, v: Place) -> int:
    if x.is_zero():
        raise ValueError("valuation of zero")
    if v.poly is None:
        return x.den.deg - x.num.deg
    return _poly_order(x.num, v.poly) - _poly_order(x.den, v.poly)


def support(x: RatFunc) -> dict[Place, int]:
    """Places with v(x) != 0, mapped to v(x), in canonical place order."""
    if x.is_zero():
        raise ValueError("support of zero")
    out: dict[Place, int] = {}
    if not x.num.is_const():
        for f, m in poly_factor(x.num):
            out[_trusted_place(f)] = m
    if not x.den.is_const():
        for f, m in poly_factor(x.den):
            out[_trusted_place(f)] = -m
    inf = x.den.deg - x.num.deg
    if inf:
        out[Place.infinite()] = inf
    total = sum(val * pl.degree for pl, val in out.items())
    assert total == 0, f"sum formula violated for {x}: {total}"
    return dict(sorted(out.items(), key=lambda kv: kv[0].sort_key()))


def height_hom(coords) -> int:
    """Homogeneous height -sum_v min_i v(y_i) deg v of a nonzero vector over K.

    Clearing denominators reduces this to max deg - deg gcd of the
    resulting polynomial vector, which avoids any factorization.
    """
    nz = [y for y in coords if not y.is_zero()]
    if not nz:
        raise ValueError("height of the zero vector")
    D = nz[0].den
    for y in nz[1:]:
        D = (D * y.den).exact_div(poly_gcd(D, y.den))
    polys = [y.num * D.exact_div(y.den) for y in nz]
    g = polys[0]
    for f in polys[1:]:
        g = poly_gcd(g, f)
    return max(f.deg for f in polys) - g.deg


def height_hom_by_places(coords) -> int:
    """Same quantity summed place by place over the union of supports."""
    nz = [y for y in coords if not y.is_zero()]
    if not nz:
        raise ValueError("height of the zero vector")
    places: set[Place] = set()
    for y in nz:
        places.update(support(y))
    total = 0
    for pl in places:
        total -= min(valuation(y, pl) for y in nz) * pl.degree
    return total


def height_point(x: RatFunc, y: RatFunc) -> int:
    return height_hom([RatFunc.one(x.field), x, y])


def _cross(w1, w2):
    x1, y1, z1 = w1
    x2, y2, z2 = w2
    return (y1 * z2 - y2 * z1, z1 * x2 - x1 * z2, x1 * y2 - x2 * y1)


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def cross_height_check(a, w1, w2) -> bool:
    """Whether H(a) <= H(w1) + H(w2) for a orthogonal to independent w1, w2.

    Also asserts that a is proportional to the cross product w1 x w2.
    """
    a, w1, w2 = tuple(a), tuple(w1), tuple(w2)
    if len(a) != 3 or len(w1) != 3 or len(w2) != 3:
        raise PreconditionError("vectors must have three coordinates")
    if all(c.is_zero() for c in a):
        raise PreconditionError("a is the zero vector")
    c = _cross(w1, w2)
    if all(x.is_zero() for x in c):
        raise PreconditionError("w1 and w2 are linearly dependent")
    if not _dot(a, w1).is_zero() or not _dot(a, w2).is_zero():
        raise PreconditionError("a is not orthogonal to both w1 and w2")
    assert all(x.is_zero() for x in _cross(a, c)), "a is not proportional to w1 x w2"
    return height_hom(a) <= height_hom(w1) + height_hom(w2)
