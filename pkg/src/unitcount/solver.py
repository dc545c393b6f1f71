"""Brute-force search for solutions of a*x + b*y = 1 with (x, y) in G.

The box [-B, B]^r is walked in reflected (boustrophedon) Gray order so each
step costs one multiplication by a generator or its inverse; every torsion
element is then tried against the current free part.  ``enumerate_naive``
re-evaluates every candidate from scratch and serves as the test oracle.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .group import (
    GroupElem,
    GroupSpec,
    PhiVector,
    PowerWitness,
    ab_power_in_G,
    elem_value,
    is_in_Gp,
    phi_of_value,
)
from .places import height_point
from .poly import RatFunc, in_Kp, rat_pth_root

DEFAULT_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBox:
    B: int
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.B < 0:
            raise ValueError("B must be non-negative")

    def candidates(self, G: GroupSpec) -> int:
        return (2 * self.B + 1) ** G.rank * len(G.torsion)

    def contains(self, exponents) -> bool:
        return all(-self.B <= e <= self.B for e in exponents)


@dataclass(frozen=True)
class SolutionRecord:
    elem: GroupElem
    value: tuple[RatFunc, RatFunc]
    height: int
    phi: PhiVector
    is_torsion: bool
    is_primitive: bool
    coords_in_Kp: bool

    @property
    def exponents(self):
        return self.elem.exponents

    @property
    def torsion(self):
        return self.elem.torsion

    @property
    def key(self):
        return (self.elem.exponents, self.elem.torsion)

    @property
    def norm(self):
        return self.phi.norm()


def make_record(G: GroupSpec, exponents, torsion: int, a=None, b=None) -> SolutionRecord:
    F = G.field
    one = RatFunc.one(F)
    a = one if a is None else a
    b = one if b is None else b
    u = G.elem(exponents, torsion)
    x, y = elem_value(u)
    assert (a * x + b * y).is_one(), f"{exponents}/{torsion} is not a solution"
    is_torsion = u.is_torsion
    primitive = not is_in_Gp(u)
    assert not (primitive and is_torsion), "primitive solution that is torsion"
    return SolutionRecord(
        elem=u,
        value=(x, y),
        height=height_point(x, y),
        phi=phi_of_value(G, (x, y)),
        is_torsion=is_torsion,
        is_primitive=primitive,
        coords_in_Kp=in_Kp(x),
    )


def gray_walk(ranges):
    """Yield (axis, step) moves visiting each point of the product of the
    inclusive ranges exactly once, starting from the vector of lower bounds."""
    x = [lo for lo, _ in ranges]
    d = [1] * len(ranges)
    total = 1
    for lo, hi in ranges:
        total *= hi - lo + 1
    for _ in range(total - 1):
        j = 0
        while not ranges[j][0] <= x[j] + d[j] <= ranges[j][1]:
            d[j] = -d[j]
            j += 1
        x[j] += d[j]
        yield j, d[j]


def _matches(G, X, Y, a, b):
    """Torsion indices tau with a*tau_1*X + b*tau_2*Y = 1."""
    ax = a * X
    by = b * Y
    P = ax.num * by.den
    Q = by.num * ax.den
    R = ax.den * by.den
    if R.deg > max(P.deg, Q.deg):
        return []
    out = []
    for i, (c1, c2) in enumerate(G.torsion):
        if P.scale(c1) + Q.scale(c2) == R:
            out.append(i)
    return out


def _scan(G: GroupSpec, ranges, a, b):
    start = tuple(lo for lo, _ in ranges)
    X, Y = elem_value(G.elem(start))
    exps = list(start)
    found = [(tuple(exps), i) for i in _matches(G, X, Y, a, b)]
    gens, invs = G.free_gens, G._inverses
    for j, step in gray_walk(ranges):
        gx, gy = gens[j] if step > 0 else invs[j]
        X = X * gx
        Y = Y * gy
        exps[j] += step
        found.extend((tuple(exps), i) for i in _matches(G, X, Y, a, b))
    return found


def _chunks(r: int, B: int, jobs: int):
    if r == 0:
        return [[]]
    jobs = max(1, min(jobs, 2 * B + 1))
    width = 2 * B + 1
    bounds = [-B + (width * i) // jobs for i in range(jobs + 1)]
    base = [(-B, B)] * (r - 1)
    return [base + [(bounds[i], bounds[i + 1] - 1)] for i in range(jobs)]


def _check_budget(G, box):
    n = box.candidates(G)
    if n > box.budget:
        raise BudgetExceeded(f"{n} candidates exceed the budget of {box.budget}")


def enumerate_solutions(G: GroupSpec, box: SearchBox, a=None, b=None, jobs: int = 1) -> list[SolutionRecord]:
    """All (x, y) in the box with a*x + b*y = 1, sorted by (exponents, torsion index)."""
    _check_budget(G, box)
    one = RatFunc.one(G.field)
    a = one if a is None else a
    b = one if b is None else b
    chunks = _chunks(G.rank, box.B, jobs)
    if jobs > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan, [G] * len(chunks), chunks, [a] * len(chunks), [b] * len(chunks)))
    else:
        parts = [_scan(G, c, a, b) for c in chunks]
    hits = sorted(h for part in parts for h in part)
    return [make_record(G, e, t, a, b) for e, t in hits]


def enumerate_naive(G: GroupSpec, box: SearchBox, a=None, b=None) -> list[tuple[tuple[int, ...], int]]:
    """Oracle: evaluate every candidate directly with no incremental products."""
    _check_budget(G, box)
    one = RatFunc.one(G.field)
    a = one if a is None else a
    b = one if b is None else b
    out = []
    for exps in product(range(-box.B, box.B + 1), repeat=G.rank):
        for t in range(len(G.torsion)):
            x, y = elem_value(G.elem(exps, t))
            if (a * x + b * y).is_one():
                out.append((tuple(exps), t))
    return out


def primitive_filter(solutions):
    return [s for s in solutions if s.is_primitive]


def count_coords_not_in_Kp(solutions) -> int:
    return sum(1 for s in solutions if not s.coords_in_Kp)


def kp_descent(x: RatFunc, y: RatFunc) -> tuple[RatFunc, RatFunc, int]:
    """Take p-th roots of a solution of x + y = 1 until x is not a p-th power."""
    if x.is_const() or y.is_const():
        raise ValueError("descent needs non-constant x and y")
    if not (x + y).is_one():
        raise ValueError("descent needs x + y = 1")
    t = 0
    while True:
        rx = rat_pth_root(x)
        if rx is None:
            assert rat_pth_root(y) is None
            return x, y, t
        ry = rat_pth_root(y)
        assert ry is not None, "x is a p-th power but 1 - x is not"
        x, y = rx, ry
        t += 1


def frobenius_pair(x: RatFunc, y: RatFunc):
    return x.frobenius(), y.frobenius()


def frobenius_elem(u: GroupElem) -> GroupElem:
    return u ** u.group.p


@dataclass
class WeightedReport:
    a: RatFunc
    b: RatFunc
    rank: int
    witness: PowerWitness | None
    excluded: bool
    solutions: list[SolutionRecord] = field(default_factory=list)
    constant_case: list[SolutionRecord] = field(default_factory=list)
    bound: int = 0

    @property
    def count(self) -> int:
        return len(self.solutions)

    @property
    def within_bound(self) -> bool:
        return self.excluded or self.count <= self.bound

    @property
    def constant_case_consistent(self) -> bool:
        # a constant a*x forces (a, b)^(q-1) in G, hence the excluded case
        return not self.constant_case or self.excluded


def unit_bound(r: int) -> int:
    return 31 * 19 ** r


def solve_weighted(a: RatFunc, b: RatFunc, G: GroupSpec, box: SearchBox, jobs: int = 1) -> WeightedReport:
    if a.is_zero() or b.is_zero():
        raise ValueError("a and b must be nonzero")
    w = ab_power_in_G(a, b, G)
    excluded = w is not None and w.coprime_to_p
    report = WeightedReport(a, b, G.rank, w, excluded, bound=unit_bound(G.rank + 1))
    # the box is searched even in the excluded case; the bound is then not claimed
    sols = enumerate_solutions(G, box, a, b, jobs=jobs)
    report.solutions = sols
    report.constant_case = [s for s in sols if (a * s.value[0]).is_const() or (b * s.value[1]).is_const()]
    return report
