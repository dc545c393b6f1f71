import pytest
from hypothesis import given, settings, strategies as st

from unitcount.group import GroupSpec, ab_power_in_G
from unitcount.poly import parse_ratfunc
from unitcount.solver import (
    BudgetExceeded,
    SearchBox,
    count_coords_not_in_Kp,
    enumerate_naive,
    enumerate_solutions,
    frobenius_elem,
    frobenius_pair,
    gray_walk,
    kp_descent,
    make_record,
    primitive_filter,
    solve_weighted,
    unit_bound,
)

from conftest import F2, F4, F5, F11


def P(text, F=F5):
    return parse_ratfunc(text, F)


def group(F, gens, tors=()):
    return GroupSpec(F, [(P(x, F), P(y, F)) for x, y in gens], [(P(x, F), P(y, F)) for x, y in tors])


G5 = group(F5, [("t", "1-t")])
G2 = group(F2, [("t", "1+t")])


def exps(sols):
    return [s.exponents for s in sols]


def test_reference_instances():
    sols = enumerate_solutions(G5, SearchBox(6))
    assert exps(sols) == [(1,), (5,)]
    assert exps(primitive_filter(sols)) == [(1,)]
    assert [s.height for s in sols] == [1, 5]
    assert [s.norm for s in sols] == [2, 10]
    assert count_coords_not_in_Kp(sols) == 1

    sols = enumerate_solutions(G2, SearchBox(4))
    assert exps(sols) == [(1,), (2,), (4,)]
    assert exps(primitive_filter(sols)) == [(1,)]
    assert count_coords_not_in_Kp(sols) == 1

    assert enumerate_solutions(group(F5, [("t^2", "(1-t)^2")]), SearchBox(6)) == []
    assert primitive_filter([]) == [] and count_coords_not_in_Kp([]) == 0


def test_records_are_consistent():
    for s in enumerate_solutions(G5, SearchBox(6)):
        x, y = s.value
        assert (x + y).is_one()
        assert not (s.is_primitive and s.is_torsion)


def test_gray_walk_visits_each_point_once():
    ranges = [(-2, 2), (0, 1), (-1, 1)]
    x = [lo for lo, _ in ranges]
    seen = {tuple(x)}
    for j, step in gray_walk(ranges):
        assert step in (1, -1)
        x[j] += step
        assert ranges[j][0] <= x[j] <= ranges[j][1]
        seen.add(tuple(x))
    assert len(seen) == 5 * 2 * 3


INSTANCES = [
    (F5, [("t", "1-t"), ("1-t", "t")], [("4", "4")], 6),
    (F4, [("t", "1+t")], [("u", "u^2")], 4),
    (F11, [("t", "1-t"), ("1/t", "(t-1)/t")], [("-1", "-1")], 5),
    (F11, [("t", "1"), ("1", "t"), ("1-t", "1"), ("1", "1-t")], [("-1", "1"), ("1", "-1")], 1),
    (F2, [("t", "1+t"), ("t^2+t+1", "t")], [], 4),
]


@pytest.mark.parametrize("F,gens,tors,B", INSTANCES)
def test_matches_naive_oracle(F, gens, tors, B):
    G = group(F, gens, tors)
    box = SearchBox(B)
    assert box.candidates(G) <= 10 ** 4
    assert [s.key for s in enumerate_solutions(G, box)] == enumerate_naive(G, box)


@pytest.mark.parametrize("F,gens,tors,B", INSTANCES)
def test_solution_set_invariants(F, gens, tors, B):
    G = group(F, gens, tors)
    box = SearchBox(B)
    sols = enumerate_solutions(G, box)
    keys = [s.key for s in sols]
    assert len(set(keys)) == len(keys) and keys == sorted(keys)
    found = set(keys)
    for s in sols:
        x, y = frobenius_pair(*s.value)
        assert (x + y).is_one()
        u = frobenius_elem(s.elem)
        if box.contains(u.exponents):
            assert (u.exponents, u.torsion) in found
    assert len(primitive_filter(sols)) <= unit_bound(G.rank)
    assert count_coords_not_in_Kp(sols) <= F.p ** G.rank


def test_weighted_equation_matches_oracle():
    G = group(F5, [("t", "1-t"), ("1-t", "t")], [("4", "4")])
    a, b = P("1/t"), P("2")
    box = SearchBox(4)
    assert [s.key for s in enumerate_solutions(G, box, a, b)] == enumerate_naive(G, box, a, b)


@pytest.mark.parametrize("jobs", [1, 2, 3, 7])
def test_partition_does_not_change_output(jobs):
    G = group(F5, [("t", "1-t"), ("1-t", "t")], [("4", "4")])
    ref = [s.key for s in enumerate_solutions(G, SearchBox(6))]
    assert [s.key for s in enumerate_solutions(G, SearchBox(6), jobs=jobs)] == ref


def test_budget_refused():
    G = group(F5, [("t", "1-t"), ("1-t", "t")], [("4", "4")])
    with pytest.raises(BudgetExceeded):
        enumerate_solutions(G, SearchBox(10, budget=100))
    with pytest.raises(BudgetExceeded):
        enumerate_naive(G, SearchBox(10, budget=100))
    with pytest.raises(ValueError):
        SearchBox(-1)


def test_make_record_rejects_non_solution():
    with pytest.raises(AssertionError):
        make_record(G5, (2,), 0)


def test_descent_examples():
    assert kp_descent(P("t^5"), P("(1-t)^5")) == (P("t"), P("1-t"), 1)
    assert kp_descent(P("t"), P("1-t")) == (P("t"), P("1-t"), 0)
    x, y, depth = kp_descent(P("t^4", F2), P("1+t^4", F2))
    assert (x, y, depth) == (P("t", F2), P("1+t", F2), 2)
    with pytest.raises(ValueError):
        kp_descent(P("2"), P("4"))
    with pytest.raises(ValueError):
        kp_descent(P("t"), P("t"))


@settings(max_examples=40)
@given(st.integers(0, 2), st.integers(1, 4), st.integers(0, 4))
def test_descent_round_trip(k, m, c):
    # x = (c + t^m)^(5^k), y = 1 - x
    base = P(f"{c}+t^{m}")
    x = base ** (5 ** k)
    y = P("1") - x
    x0, y0, depth = kp_descent(x, y)
    assert depth == k and x0 ** (5 ** depth) == x and y0 ** (5 ** depth) == y
    assert (x0 + y0).is_one()


def test_weighted_examples():
    rep = solve_weighted(P("1/t^2"), P("1/(1-t)^2"), G5, SearchBox(6))
    assert rep.excluded and rep.witness.n == 1 and rep.witness.exponents == (-2,)
    assert rep.within_bound

    rep = solve_weighted(P("2"), P("3"), G5, SearchBox(6))
    assert rep.count == 0 and rep.bound == 31 * 19 ** 2 and rep.within_bound
    # (2, 3)^4 = (1, 1) lies in G, so this pair is also in the excluded case
    assert rep.witness.n == 4 and rep.excluded

    rep = solve_weighted(P("t"), P("1"), G5, SearchBox(6))
    assert rep.witness is None and not rep.excluded
    assert rep.count == 0 and rep.within_bound


def test_weighted_unit_case_reduces_to_enumeration():
    rep = solve_weighted(P("1"), P("1"), G5, SearchBox(6))
    w = ab_power_in_G(P("1"), P("1"), G5)
    assert (w.n, w.exponents) == (1, (0,))
    assert [s.key for s in rep.solutions] == [s.key for s in enumerate_solutions(G5, SearchBox(6))]
    with pytest.raises(ValueError):
        solve_weighted(P("0"), P("1"), G5, SearchBox(6))


def test_weighted_constant_case_classified():
    G = group(F5, [("t", "1-t")], [("2", "1"), ("1", "2")])
    a, b = P("1/t"), P("1/(1-t)")
    rep = solve_weighted(a, b, G, SearchBox(3))
    # (x, y) = (c1*t, c2*(1-t)) with c1 + c2 = 1 makes both a*x and b*y constant
    assert len(rep.constant_case) == 3  # c1 in {2, 3, 4}
    for s in rep.constant_case:
        assert (a * s.value[0]).is_const() and s.exponents == (1,)
    assert rep.excluded and rep.constant_case_consistent
