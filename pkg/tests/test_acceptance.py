"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import random
import time
from fractions import Fraction
from math import gcd

import pytest

from unitcount import wn
from unitcount.certify import THETA_LIMIT, bound_theta, check_multiple_gap, check_pair_gap
from unitcount.cli import gallery_paths, main
from unitcount.config import load_config
from unitcount.group import GroupSpec, phi_of_value
from unitcount.places import height_hom, support
from unitcount.poly import Poly, RatFunc, parse_ratfunc
from unitcount.solver import (
    SearchBox,
    count_coords_not_in_Kp,
    enumerate_naive,
    enumerate_solutions,
    kp_descent,
    primitive_filter,
    solve_weighted,
    unit_bound,
)

from conftest import F4, F5

CONFIGS = [load_config(p) for p in gallery_paths()]


@pytest.fixture
def verdict(capsys):
    def emit(n, ok, detail=""):
        with capsys.disabled():
            print(f"\n[acceptance {n:>2}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return emit


def rand_poly(rng, F, max_deg, nonzero=True):
    while True:
        f = Poly(F, [rng.randrange(F.q) for _ in range(rng.randint(0, max_deg) + 1)])
        if f.deg >= 0 or not nonzero:
            return f


def rand_ratfunc(rng, F, max_deg=6):
    return RatFunc(rand_poly(rng, F, max_deg), rand_poly(rng, F, max_deg))


def test_01_wn_identities(verdict):
    t0 = time.perf_counter()
    ok = all(wn.wn_antisymmetry_check(N) and wn.wn_syzygy_check(N) for N in range(1, 21))
    dt = time.perf_counter() - t0
    verdict(1, ok and dt < 60, f"antisymmetry and syzygy for N <= 20 in {dt:.2f}s")


def test_02_cn_suite(verdict):
    values = [wn.cn_compute(N) for N in range(1, 16)]
    det = wn.cn_determinant(1)(2, -1)
    ok = all(values) and abs(values[0]) == 24 and abs(det) == 576
    ok = ok and abs(det) == 2 * wn.wn_build(1)(2, -1) * wn.wn_build(2)(2, -1)
    verdict(2, ok, f"c_1 = {values[0]}, det(2,-1,-1) = {det}, c_N != 0 for N <= 15")


def test_03_special_value(verdict):
    ok = True
    for N in range(41):
        closed = 4 ** N * wn.generalized_binomial(Fraction(3 * N, 2), N)
        ok = ok and closed.denominator == 1 and wn.wn_build(N)(2, -1) == closed == wn.wn_special_value(N)
    verdict(3, ok, "W_N(2,-1) = 4^N binom(3N/2, N) for N <= 40")


def test_04_cn_window(verdict):
    t0 = time.perf_counter()
    primes = [p for p in range(3, 98) if all(p % d for d in range(2, p))]
    reports = [wn.cn_mod_p_window(p) for p in primes]
    dt = time.perf_counter() - t0
    checked = sum(len(r.table) for r in reports)
    ok = all(r.passed for r in reports) and dt < 120
    verdict(4, ok, f"{len(primes)} odd primes <= 97, {checked} (p, N) pairs in {dt:.2f}s")


def test_05_heights(verdict):
    rng = random.Random(20240229)
    sums_ok = True
    for F in (F5, F4):
        for _ in range(1000):
            x = rand_ratfunc(rng, F)
            sums_ok = sums_ok and sum(v * pl.degree for pl, v in support(x).items()) == 0
    scale_ok = True
    for _ in range(500):
        F = rng.choice((F5, F4))
        lam = rand_ratfunc(rng, F, 4)
        pt = [rand_ratfunc(rng, F, 4) for _ in range(rng.randint(2, 3))]
        scale_ok = scale_ok and height_hom([lam * c for c in pt]) == height_hom(pt)
    zero_ok = True
    for i in range(500):
        F = rng.choice((F5, F4))
        lam = rand_ratfunc(rng, F, 4)
        if i % 2:
            pt = [lam.scale(rng.randrange(1, F.q)) for _ in range(3)]
        else:
            pt = [rand_ratfunc(rng, F, 3) for _ in range(3)]
        constant = all((c / pt[0]).is_const() for c in pt)
        zero_ok = zero_ok and (height_hom(pt) == 0) == constant
    verdict(5, sums_ok and scale_ok and zero_ok,
            f"sum formula x2000, scaling x500, zero iff constant x500 (sum={sums_ok}, scale={scale_ok}, zero={zero_ok})")


def test_06_reference_enumeration(verdict):
    t0 = time.perf_counter()
    F = F5
    G = GroupSpec(F, [(parse_ratfunc("t", F), parse_ratfunc("1-t", F))])
    box = SearchBox(6)
    sols = enumerate_solutions(G, box)
    oracle = enumerate_naive(G, box)
    dt = time.perf_counter() - t0
    exps = [s.exponents for s in sols]
    prim = len(primitive_filter(sols))
    free = count_coords_not_in_Kp(sols)
    ok = exps == [(1,), (5,)] and [s.key for s in sols] == oracle
    ok = ok and prim == 1 <= unit_bound(1) and free == 1 <= 5 and dt < 10
    verdict(6, ok, f"exponents {exps}, primitive {prim} <= {unit_bound(1)}, not in K^p {free} <= 5, {dt:.2f}s")


def _unit_instances():
    for cfg in CONFIGS:
        if cfg.is_unit_equation:
            yield cfg, enumerate_solutions(cfg.group, cfg.box)


def test_07_pair_and_multiple_gap(verdict):
    pairs = multi = 0
    ok = True
    for cfg, sols in _unit_instances():
        for u in sols:
            for v in sols:
                if u.key == v.key:
                    continue
                pairs += 1
                ok = ok and check_pair_gap(u, v)
                if cfg.field.p == 11:
                    M, good = check_multiple_gap(u, v, 1)
                    multi += 1
                    ok = ok and good and M in (1, 2)
    verdict(7, ok and multi > 0, f"{pairs} ordered pairs pass the gap, {multi} p=11 pairs find M")


def test_08_frobenius(verdict):
    n = 0
    ok = True
    for cfg, sols in _unit_instances():
        p = cfg.field.p
        for s in sols:
            x, y = s.value
            fx, fy = x.frobenius(), y.frobenius()
            ok = ok and (fx + fy).is_one() and fx == x ** p
            ok = ok and phi_of_value(cfg.group, (fx, fy)) == s.phi.scale(p)
            if not (x.is_const() or y.is_const()):
                dx, dy, t = kp_descent(x, y)
                ok = ok and dx ** (p ** t) == x and dy ** (p ** t) == y
            n += 1
    verdict(8, ok and n > 0, f"{n} gallery solutions")


def test_09_bound_anchor(verdict, capsys):
    rows = [bound_theta(THETA_LIMIT, r) for r in range(11)]
    b0 = rows[0]
    ok = all(b.holds for b in rows) and b0.upper < 31
    with capsys.disabled():
        print()
        for b in rows:
            print(f"    r={b.r:>2} value={b.value:.6f} upper={float(b.upper):.6f} < {b.bound}: {b.holds}")
    verdict(9, ok, f"theta -> 1/9, r = 0: {b0.value:.6f} (rounded up {float(b0.upper):.6f}) < 31")


def test_10_weighted_reduction(verdict):
    by_name = {cfg.name: cfg for cfg in CONFIGS}
    ex = by_name["f5_weighted_exclusion"]
    rep = solve_weighted(ex.a, ex.b, ex.group, ex.box)
    ok1 = rep.excluded and rep.witness.n == 1 and gcd(rep.witness.n, ex.field.p) == 1
    em = by_name["f5_weighted_empty"]
    rep2 = solve_weighted(em.a, em.b, em.group, em.box)
    bound = 31 * 19 ** (em.group.rank + 1)
    ok2 = rep2.count == 0 and rep2.bound == bound and rep2.within_bound
    verdict(10, ok1 and ok2, f"exclusion n = {rep.witness.n}; empty instance count {rep2.count} <= {bound}")


def test_11_determinism(verdict, tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    codes = [main(["gallery", "--seed", "1", "--out", str(a)]), main(["gallery", "--seed", "1", "--out", str(b)])]
    capsys.readouterr()
    files = sorted(p.relative_to(a) for p in a.rglob("*") if p.is_file())
    same = all((a / f).read_bytes() == (b / f).read_bytes() for f in files)
    ok = codes == [0, 0] and same and len(files) > 1
    verdict(11, ok, f"{len(files)} report files byte-identical across two gallery runs")
