"""Finitely generated subgroups G of K* x K* for K = F_q(t).

G is given by free generators, independent modulo torsion, and a list of
constant torsion generators.  Elements are exponent vectors plus an index
into the materialized torsion subgroup.  The map ``phi`` sends an element to
its weighted valuation vectors on the support set S.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm

from .ff import FieldSpec
from .places import Place, support, valuation
from .poly import RatFunc
from .snf import left_kernel, rank, smith_normal_form


class DependentGeneratorsError(ValueError):
    def __init__(self, relation):
        self.relation = list(relation)
        super().__init__(f"free generators are dependent modulo torsion; relation {self.relation}")


@dataclass(frozen=True)
class PhiVector:
    first: tuple[int, ...]
    second: tuple[int, ...]

    def __add__(self, o: "PhiVector") -> "PhiVector":
        return PhiVector(tuple(a + b for a, b in zip(self.first, o.first)),
                         tuple(a + b for a, b in zip(self.second, o.second)))

    def __sub__(self, o: "PhiVector") -> "PhiVector":
        return self + o.scale(-1)

    def scale(self, c: int) -> "PhiVector":
        return PhiVector(tuple(c * a for a in self.first), tuple(c * a for a in self.second))

    def is_zero(self) -> bool:
        return not any(self.first) and not any(self.second)

    def flat(self) -> tuple[int, ...]:
        return self.first + self.second

    def norm(self) -> Fraction:
        return phi_norm(self)


def phi_norm(x: PhiVector) -> Fraction:
    """Average of the L1 norms of the two halves."""
    return Fraction(sum(map(abs, x.first)) + sum(map(abs, x.second)), 2)


def _phi_row(pair, places) -> PhiVector:
    x, y = pair
    return PhiVector(tuple(valuation(x, v) * v.degree for v in places),
                     tuple(valuation(y, v) * v.degree for v in places))


class GroupSpec:
    def __init__(self, field: FieldSpec, free_gens, torsion_gens=()):
        self.field = field
        gens = []
        for x, y in free_gens:
            if x.is_zero() or y.is_zero():
                raise ValueError("generator coordinates must be nonzero")
            if x.field != field or y.field != field:
                raise ValueError("generator over a different field")
            gens.append((x, y))
        self.free_gens = tuple(gens)
        tors = []
        for c1, c2 in torsion_gens:
            codes = []
            for c in (c1, c2):
                if isinstance(c, RatFunc):
                    if not c.is_const():
                        raise ValueError(f"torsion generator coordinate {c} is not constant")
                    c = c.const_value()
                if c == 0:
                    raise ValueError("torsion generator coordinate is zero")
                codes.append(c)
            tors.append(tuple(codes))
        self.torsion_gens = tuple(tors)

        places: set[Place] = set()
        for x, y in self.free_gens:
            places.update(support(x))
            places.update(support(y))
        self.support = tuple(sorted(places, key=Place.sort_key))
        self.phi_rows = tuple(_phi_row(g, self.support) for g in self.free_gens)
        matrix = [list(row.flat()) for row in self.phi_rows]
        if matrix and rank(matrix) < len(matrix):
            raise DependentGeneratorsError(left_kernel(matrix)[0])
        self.torsion = self._close_torsion()
        self._torsion_index = {t: i for i, t in enumerate(self.torsion)}
        self._inverses = tuple((x.inverse(), y.inverse()) for x, y in self.free_gens)

    def __reduce__(self):
        return (GroupSpec, (self.field, self.free_gens, self.torsion_gens))

    @property
    def rank(self) -> int:
        return len(self.free_gens)

    @property
    def p(self) -> int:
        return self.field.p

    def _close_torsion(self):
        F = self.field
        elems = {(1, 1)}
        frontier = [(1, 1)]
        while frontier:
            nxt = []
            for a, b in frontier:
                for c, d in self.torsion_gens:
                    e = (F.mul(a, c), F.mul(b, d))
                    if e not in elems:
                        elems.add(e)
                        nxt.append(e)
            frontier = nxt
        return ((1, 1),) + tuple(sorted(elems - {(1, 1)}))

    def torsion_index(self, pair) -> int | None:
        return self._torsion_index.get(tuple(pair))

    def torsion_mul(self, i: int, j: int) -> int:
        F = self.field
        a, b = self.torsion[i]
        c, d = self.torsion[j]
        return self._torsion_index[(F.mul(a, c), F.mul(b, d))]

    def torsion_pow(self, i: int, e: int) -> int:
        F = self.field
        a, b = self.torsion[i]
        return self._torsion_index[(F.pow(a, e), F.pow(b, e))]

    def elem(self, exponents, torsion: int = 0) -> "GroupElem":
        exps = tuple(int(e) for e in exponents)
        if len(exps) != self.rank:
            raise ValueError(f"expected {self.rank} exponents, got {len(exps)}")
        if not 0 <= torsion < len(self.torsion):
            raise ValueError(f"torsion index {torsion} out of range")
        return GroupElem(self, exps, torsion)

    def identity(self) -> "GroupElem":
        return self.elem((0,) * self.rank)


@dataclass(frozen=True)
class GroupElem:
    group: GroupSpec = field(compare=False, repr=False)
    exponents: tuple[int, ...]
    torsion: int = 0

    def __mul__(self, o: "GroupElem") -> "GroupElem":
        return GroupElem(self.group, tuple(a + b for a, b in zip(self.exponents, o.exponents)),
                         self.group.torsion_mul(self.torsion, o.torsion))

    def __pow__(self, e: int) -> "GroupElem":
        return GroupElem(self.group, tuple(e * a for a in self.exponents),
                         self.group.torsion_pow(self.torsion, e))

    @property
    def is_torsion(self) -> bool:
        return not any(self.exponents)


def group_support(G: GroupSpec) -> list[Place]:
    return list(G.support)


def group_rank(G: GroupSpec) -> int:
    matrix = [list(row.flat()) for row in G.phi_rows]
    return rank(matrix) if matrix else 0


def elem_value(u: GroupElem) -> tuple[RatFunc, RatFunc]:
    G = u.group
    F = G.field
    x = RatFunc.one(F)
    y = RatFunc.one(F)
    for (gx, gy), e in zip(G.free_gens, u.exponents):
        if e:
            x = x * gx ** e
            y = y * gy ** e
    c1, c2 = G.torsion[u.torsion]
    return x.scale(c1), y.scale(c2)


def phi(u: GroupElem) -> PhiVector:
    """Weighted valuation vectors of the value of u on the ordered support S."""
    return _phi_row(elem_value(u), u.group.support)


def phi_of_value(G: GroupSpec, pair) -> PhiVector:
    return _phi_row(pair, G.support)


def is_in_Gp(u: GroupElem) -> bool:
    G = u.group
    if any(e % G.p for e in u.exponents):
        return False
    # torsion order divides (q-1)^2, prime to p, so a p-th root always exists
    roots = [i for i in range(len(G.torsion)) if G.torsion_pow(i, G.p) == u.torsion]
    assert roots, "torsion element without a p-th root"
    return True


def quotient_size_Gp(G: GroupSpec) -> int:
    return G.p ** G.rank


def quotient_size_Gp_enumerated(G: GroupSpec) -> int:
    """|G/G^p| by listing cosets of exponent vectors mod p and torsion mod its p-th powers."""
    p = G.p
    tp = frozenset(G.torsion_pow(i, p) for i in range(len(G.torsion)))
    cosets = {frozenset(G.torsion_mul(i, j) for j in tp) for i in range(len(G.torsion))}
    return len(list(product(range(p), repeat=G.rank))) * len(cosets)


@dataclass(frozen=True)
class PowerWitness:
    n: int
    exponents: tuple[int, ...]
    torsion: int
    coprime_to_p: bool


def ab_power_in_G(a: RatFunc, b: RatFunc, G: GroupSpec) -> PowerWitness | None:
    """Least n >= 1 with (a, b)^n in G, with the exponent witness, or None."""
    if a.is_zero() or b.is_zero():
        raise ValueError("a and b must be nonzero")
    F = G.field
    places = set(G.support)
    places.update(support(a))
    places.update(support(b))
    places = sorted(places, key=Place.sort_key)
    w = _phi_row((a, b), places).flat()
    r = G.rank
    if r == 0:
        if any(w):
            return None
        e = []
        n0 = 1
    else:
        A = [list(_phi_row(g, places).flat()) for g in G.free_gens]
        U, D, V = smith_normal_form(A)
        # e A = w  <=>  f D = w V with f = e U^{-1}
        wV = [sum(w[i] * V[i][j] for i in range(len(w))) for j in range(len(w))]
        f = []
        for j in range(len(wV)):
            d = D[j][j] if j < r else 0
            if d:
                f.append(Fraction(wV[j], d))
            elif wV[j]:
                return None
        e = [sum(f[i] * U[i][j] for i in range(r)) for j in range(r)]
        n0 = lcm(*(x.denominator for x in e)) if e else 1
    base = [int(n0 * x) for x in e]
    gx, gy = elem_value(G.elem(base))
    cx = a ** n0 / gx
    cy = b ** n0 / gy
    assert cx.is_const() and cy.is_const(), "valuation-free quotient is not constant"
    c = (cx.const_value(), cy.const_value())
    order = (F.q - 1) ** 2
    cur = c
    for j in range(1, order + 1):
        idx = G.torsion_index(cur)
        if idx is not None:
            n = n0 * j
            return PowerWitness(n, tuple(j * x for x in base), idx, n % G.p != 0)
        cur = (F.mul(cur[0], c[0]), F.mul(cur[1], c[1]))
    raise AssertionError("constant pair has no power in the torsion subgroup")
