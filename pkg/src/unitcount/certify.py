"""Exact checks of the gap-principle inequalities on enumerated solutions.

Every comparison is between integers or Fractions.  Only ``bound_theta``
uses floating logarithms, and it does so with interval arithmetic so the
reported left-hand side is an upper bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import ceil

from mpmath import iv, libmp

from .group import GroupSpec, PhiVector, phi_of_value
from .places import PreconditionError, height_hom, height_point
from .poly import RatFunc
from .solver import SearchBox, SolutionRecord, count_coords_not_in_Kp, kp_descent, unit_bound

DEFAULT_THETA = Fraction(1, 9) - Fraction(1, 1000)
THETA_LIMIT = Fraction(1, 9)


def _check_theta(theta, allow_limit=False):
    theta = Fraction(theta)
    if not 0 < theta < THETA_LIMIT and not (allow_limit and theta == THETA_LIMIT):
        raise ValueError(f"theta={theta} must lie in (0, 1/9)")
    return theta


def _phi(u) -> PhiVector:
    return u.phi if isinstance(u, SolutionRecord) else u


def _norm(u) -> Fraction:
    return _phi(u).norm()


def _l1_half(vec) -> Fraction:
    return sum((abs(c) for c in vec), Fraction(0)) / 2


def _tag(u):
    if isinstance(u, SolutionRecord):
        return {"exponents": list(u.exponents), "torsion": u.torsion}
    return {"phi": [list(u.first), list(u.second)]}


# --- checks on pairs


def check_pair_gap(u: SolutionRecord, v: SolutionRecord) -> bool:
    """H(u) <= H(v/u) and ||phi(u)|| <= 2 ||phi(v) - phi(u)||."""
    if u.key == v.key:
        raise PreconditionError("check_pair_gap needs distinct solutions")
    (u1, u2), (v1, v2) = u.value, v.value
    height_ok = u.height <= height_point(v1 / u1, v2 / u2)
    norm_ok = u.norm <= 2 * (v.phi - u.phi).norm()
    return height_ok and norm_ok


def multiple_gap_window_ok(N: int, p: int) -> bool:
    return N >= 1 and 3 * N + 6 < p


def check_multiple_gap(u: SolutionRecord, v: SolutionRecord, N: int) -> tuple[int | None, bool]:
    """First M in {N, N+1} with (M+1) H(u) <= H(v u^-(2M+1)) and the matching norm inequality."""
    if u.key == v.key:
        raise PreconditionError("check_multiple_gap needs distinct solutions")
    p = u.elem.group.p
    if not multiple_gap_window_ok(N, p):
        raise PreconditionError(f"N={N} is outside the window N < p/3 - 2 for p={p}")
    (u1, u2), (v1, v2) = u.value, v.value
    for M in (N, N + 1):
        e = 2 * M + 1
        h = height_point(v1 / u1 ** e, v2 / u2 ** e)
        if (M + 1) * u.height > h:
            continue
        if (M + 1) * u.norm > 2 * (v.phi - u.phi.scale(e)).norm():
            continue
        return M, True
    return None, False


# --- cones


@dataclass
class Cone:
    direction: PhiVector
    members: list = field(default_factory=list)


def _direction_key(e: PhiVector):
    n = e.norm()
    return tuple(Fraction(c) / n for c in e.flat())


def in_cone(x, e, theta) -> bool:
    """|| x ||e|| - e ||x|| || <= theta ||x|| ||e||, all in exact rationals."""
    x, e = _phi(x), _phi(e)
    nx, ne = x.norm(), e.norm()
    if nx == 0 or ne == 0:
        return False
    diff = [a * ne - b * nx for a, b in zip(x.flat(), e.flat())]
    return _l1_half(diff) <= theta * nx * ne


def cone_assign(solutions, theta, directions=None) -> list[Cone]:
    """Put each solution with nonzero phi into every cone it lies in.

    Directions default to the solutions' own phi vectors, deduplicated by
    normalized direction.
    """
    theta = _check_theta(theta)
    pool = [s for s in solutions if not _phi(s).is_zero()]
    if directions is None:
        directions = [_phi(s) for s in pool]
    cones = []
    seen = set()
    for e in directions:
        e = _phi(e)
        if e.is_zero():
            continue
        key = _direction_key(e)
        if key in seen:
            continue
        seen.add(key)
        cones.append(Cone(e, [s for s in pool if in_cone(s, e, theta)]))
    return cones


def _common_cone(u1, u2, theta, direction):
    cands = [direction] if direction is not None else [_phi(u1), _phi(u2)]
    return any(in_cone(u1, e, theta) and in_cone(u2, e, theta) for e in cands)


def check_cone_gap(u1, u2, theta, direction=None) -> bool:
    """||u2|| >= (3 - theta)/(2 + theta) ||u1|| for cone-mates with ||u2|| >= ||u1||."""
    theta = _check_theta(theta)
    if _phi(u1) == _phi(u2):
        raise PreconditionError("check_cone_gap needs distinct elements")
    n1, n2 = _norm(u1), _norm(u2)
    if n2 < n1:
        raise PreconditionError("check_cone_gap needs ||u2|| >= ||u1||")
    if not _common_cone(u1, u2, theta, direction):
        raise PreconditionError("elements do not share a cone")
    return n2 * (2 + theta) >= (3 - theta) * n1


def check_cone_antigap(u1, u2, theta, p: int, direction=None) -> bool:
    """If ||u2||/||u1|| < 2p/3 - 3 then ||u2||/||u1|| <= 10/theta."""
    theta = _check_theta(theta)
    if _phi(u1) == _phi(u2):
        raise PreconditionError("check_cone_antigap needs distinct elements")
    if not _common_cone(u1, u2, theta, direction):
        raise PreconditionError("elements do not share a cone")
    ratio = _norm(u2) / _norm(u1)
    if not 3 * ratio < 2 * p - 9:
        raise PreconditionError(f"ratio {ratio} is not below 2p/3 - 3 for p={p}")
    return ratio * theta <= 10


def lambda_reduce(u, u0, p: int) -> tuple[int, Fraction]:
    """(k, lam): k >= 0 least with ||u|| / (p^k ||u0||) < p, and lam that quotient."""
    n0 = _norm(u0)
    if n0 == 0:
        raise PreconditionError("u0 has zero norm")
    n = _norm(u)
    k = 0
    while n / (p ** k * n0) >= p:
        k += 1
    return k, n / (p ** k * n0)


# --- the final count


@dataclass(frozen=True)
class BoundResult:
    theta: Fraction
    r: int
    value: float
    upper: Fraction  # left side rounded up to 1e-6
    bound: int

    @property
    def holds(self) -> bool:
        return self.upper < self.bound


def _iv_upper(x) -> Fraction:
    num, den = libmp.to_rational(x._mpi_[1])
    return Fraction(int(num), int(den))


def bound_theta(theta, r: int) -> BoundResult:
    """2 (1 + log(10/theta)/log(26/19)) (1 + 2/theta)^r against 31 * 19^r.

    theta = 1/9 is accepted and means the limit theta -> 1/9; the
    expression is continuous there.
    """
    theta = _check_theta(theta, allow_limit=True)
    if r < 0:
        raise ValueError("r must be non-negative")
    saved = iv.prec
    iv.prec = 140
    try:
        return _bound_theta(theta, r)
    finally:
        iv.prec = saved


def _bound_theta(theta, r):
    t = iv.mpf(theta.numerator) / iv.mpf(theta.denominator)
    per_cone = 2 * (1 + iv.log(10 / t) / iv.log(iv.mpf(26) / iv.mpf(19)))
    cones = (1 + 2 / theta) ** r  # exact rational
    val = per_cone * iv.mpf(cones.numerator) / iv.mpf(cones.denominator)
    up = _iv_upper(val)
    rounded = Fraction(ceil(up * 10 ** 6), 10 ** 6)
    return BoundResult(theta, r, float(val.mid), rounded, unit_bound(r))


# --- whole-instance certification


@dataclass
class Check:
    name: str
    status: str = "vacuous"  # pass | fail | vacuous | skipped
    checked: int = 0
    skipped: int = 0
    witnesses: list = field(default_factory=list)
    note: str = ""

    def record(self, ok: bool, witness=None):
        self.checked += 1
        if not ok:
            self.status = "fail"
            self.witnesses.append(witness)
        elif self.status != "fail":
            self.status = "pass"

    def as_dict(self):
        status = "skipped" if self.status == "vacuous" and self.skipped else self.status
        return {"name": self.name, "status": status, "checked": self.checked,
                "skipped": self.skipped, "witnesses": self.witnesses, "note": self.note}


@dataclass
class CertReport:
    p: int
    rank: int
    theta: Fraction
    checks: list[Check]
    counts: dict
    bounds: dict

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def as_dict(self):
        return {"p": self.p, "rank": self.rank, "theta": str(self.theta), "passed": self.passed,
                "counts": self.counts, "bounds": self.bounds,
                "checks": [c.as_dict() for c in self.checks]}


def _lambda_checks(cone: Cone, theta, p, checks):
    gap, upper, rng, inj = checks
    prim = [s for s in cone.members if s.is_primitive]
    if not prim:
        return
    u0 = min(prim, key=lambda s: (s.norm, s.key))
    lam = {s.key: lambda_reduce(s, u0, p)[1] for s in prim}
    vals = list(lam.values())
    inj.record(len(set(vals)) == len(vals),
               {"direction": [list(cone.direction.first), list(cone.direction.second)],
                "lambdas": sorted(str(v) for v in vals)} if len(set(vals)) != len(vals) else None)
    big = p > 7
    parts = ([s for s in prim if lam[s.key] ** 2 <= p], [s for s in prim if lam[s.key] ** 2 > p])
    for part in parts:
        for s1, s2 in permutations(part, 2):
            l1, l2 = lam[s1.key], lam[s2.key]
            if l2 < l1:
                continue
            gap.record(l2 * (2 + theta) >= (3 - theta) * l1,
                       {"u1": _tag(s1), "u2": _tag(s2), "lambda1": str(l1), "lambda2": str(l2)})
            if big:
                upper.record(l2 * theta <= 10 * l1,
                             {"u1": _tag(s1), "u2": _tag(s2), "lambda1": str(l1), "lambda2": str(l2)})
            else:
                upper.skipped += 1
    for s in parts[1]:
        if big:
            l = lam[s.key]
            rng.record(theta * p <= 10 * l < 10 * p, {"u": _tag(s), "lambda": str(l)})
        else:
            rng.skipped += 1


def certify_instance(G: GroupSpec, solutions, theta=DEFAULT_THETA, N_list=(1,),
                     box: SearchBox | None = None) -> CertReport:
    theta = _check_theta(theta)
    p, r = G.p, G.rank
    one = RatFunc.one(G.field)
    checks: dict[str, Check] = {}

    def chk(name, note=""):
        if name not in checks:
            checks[name] = Check(name, note=note)
        return checks[name]

    integrity = chk("record_integrity", "x + y = 1, height and phi recomputed")
    for s in solutions:
        x, y = s.value
        ok = (x + y).is_one() and s.height == height_hom([one, x, y]) \
            and s.norm == height_hom([one, x]) + height_hom([one, y])
        integrity.record(ok, {**_tag(s), "x": str(x), "y": str(y)})
    good = [s for s in solutions if (s.value[0] + s.value[1]).is_one()]

    contain = chk("prim_subset_sol", "primitive solutions are non-torsion")
    for s in good:
        contain.record(not (s.is_primitive and s.is_torsion), _tag(s))

    sol = [s for s in good if not s.is_torsion]
    inj = chk("phi_injective_on_sol")
    seen = {}
    for s in sol:
        k = s.phi
        inj.record(k not in seen, {"u": _tag(s), "v": _tag(seen[k])} if k in seen else None)
        seen.setdefault(k, s)

    pair = chk("pair_gap", "H(u) <= H(v/u) and ||u|| <= 2||v - u||")
    for u, v in permutations(good, 2):
        pair.record(check_pair_gap(u, v), {"u": _tag(u), "v": _tag(v)})

    for N in N_list:
        c = chk(f"multiple_gap_N{N}", "exists M in {N, N+1}")
        if not multiple_gap_window_ok(N, p):
            c.status = "skipped"
            c.note = f"N={N} is outside N < p/3 - 2 for p={p}"
            continue
        for u, v in permutations(good, 2):
            M, ok = check_multiple_gap(u, v, N)
            c.record(ok, {"u": _tag(u), "v": _tag(v), "N": N})

    frob = chk("frobenius", "(x^p, y^p) solves, phi scales by p, image present when in the box")
    keys = {s.key for s in good}
    for s in good:
        x, y = s.value
        fx, fy = x.frobenius(), y.frobenius()
        img = s.elem ** p
        ok = (fx + fy).is_one() and fx == x ** p
        ok = ok and phi_of_value(G, (fx, fy)) == s.phi.scale(p)
        if box is not None and box.contains(img.exponents):
            ok = ok and (img.exponents, img.torsion) in keys
        frob.record(ok, _tag(s))

    desc = chk("descent_roundtrip")
    for s in sol:
        x, y = s.value
        if x.is_const() or y.is_const():
            continue
        dx, dy, t = kp_descent(x, y)
        desc.record(dx ** (p ** t) == x and dy ** (p ** t) == y and (dx + dy).is_one(), _tag(s))

    cones = cone_assign(sol, theta)
    cgap = chk("cone_gap", "norm gap (3 - theta)/(2 + theta) inside each cone")
    canti = chk("cone_antigap", "ratio < 2p/3 - 3 implies ratio <= 10/theta")
    lam_checks = [chk("lambda_gap"), chk("lambda_upper"), chk("lambda_range"), chk("lambda_injective")]
    for cone in cones:
        for u1, u2 in permutations(cone.members, 2):
            if u1.norm > u2.norm:
                continue
            cgap.record(check_cone_gap(u1, u2, theta, cone.direction), {"u1": _tag(u1), "u2": _tag(u2)})
            try:
                canti.record(check_cone_antigap(u1, u2, theta, p, cone.direction),
                             {"u1": _tag(u1), "u2": _tag(u2)})
            except PreconditionError:
                canti.skipped += 1
        _lambda_checks(cone, theta, p, lam_checks)
    if p <= 7:
        for c in lam_checks[1:3]:
            c.note = "needs p > 7"

    prim = [s for s in good if s.is_primitive]
    kp_free = count_coords_not_in_Kp(good)
    counts = {"solutions": len(good), "sol": len(sol), "primitive": len(prim),
              "not_in_Kp": kp_free, "cones": len(cones)}
    bounds = {"primitive_max": unit_bound(r), "p_power_r": p ** r}
    chk("count_primitive").record(len(prim) <= unit_bound(r), {"primitive": len(prim)})
    chk("count_not_in_Kp").record(kp_free <= p ** r, {"not_in_Kp": kp_free})
    chk("count_primitive_p_r").record(len(prim) <= p ** r, {"primitive": len(prim)})
    return CertReport(p, r, theta, list(checks.values()), counts, bounds)
