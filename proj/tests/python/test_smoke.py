"""End-to-end smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import wlcs


def frac(r):
    return Fraction(r.num, r.den)


def test_rational_is_exact_and_unreduced():
    half = wlcs.Rational(2, 4)
    assert (half.num, half.den) == (2, 4)
    assert half == wlcs.Rational(1, 2)  # value comparison
    assert not wlcs.structurally_equal(half, wlcs.Rational(1, 2))
    assert half.canonical().num == 1
    big = wlcs.Rational(10**40, 3 * 10**40)
    assert frac(big) == Fraction(1, 3)
    assert frac(half * big) == Fraction(1, 6)
    assert wlcs.Rational.parse("7/8").one_minus() == wlcs.Rational(1, 8)


def test_mul_many_matches_fraction_product():
    xs = [wlcs.Rational(i + 1, 2 * i + 3) for i in range(50)]
    want = Fraction(1)
    for x in xs:
        want *= frac(x)
    assert frac(wlcs.mul_many(xs)) == want


def test_appendix_fixture_solves_exactly():
    inst = wlcs.appendix_counterexample(wlcs.Rational(1, 1))
    assert frac(inst.a1) == Fraction(1, 8)
    assert frac(inst.a2) == Fraction(1, 4)

    for method in ("auto", "pareto", "brute"):
        assert wlcs.solve(inst, method=method).opt == 4
    assert wlcs.dfs_oracle(inst) == 4

    res = wlcs.solve(inst)
    check = wlcs.verify_witness(inst, res.witness)
    assert check.feasible
    assert frac(check.px) >= Fraction(1, 8)
    assert frac(check.py) >= Fraction(1, 4)

    low = wlcs.appendix_counterexample(wlcs.Rational(81, 100))
    assert wlcs.solve(low).opt == 3


def test_instance_round_trip_and_construction():
    inst = wlcs.appendix_counterexample(wlcs.Rational(81, 100))
    text = wlcs.serialize_instance(inst)
    back = wlcs.parse_instance(text)
    assert wlcs.serialize_instance(back) == text

    r = wlcs.Rational
    hand = wlcs.Instance(
        letters=["a", "b"],
        x_rows=[[r(1, 2), r(1, 2)], [r(1, 4), r(3, 4)]],
        y_rows=[[r(1, 1), r(0, 1)], [r(1, 2), r(1, 2)]],
        a1=r(1, 8),
        a2=r(1, 4),
    )
    assert wlcs.solve(hand).opt == 2
    assert wlcs.validate(hand) == []

    with pytest.raises(wlcs.ValidationError):
        wlcs.Instance(
            letters=["a", "b"],
            x_rows=[[r(1, 2), r(1, 3)]],  # row sums to 5/6
            y_rows=[[r(1, 2), r(1, 2)]],
            a1=r(1, 2),
            a2=r(1, 2),
        )


def test_witness_checks_and_membership():
    inst = wlcs.appendix_counterexample(wlcs.Rational(1, 1))
    w = wlcs.Witness(s=["a"] * 4, pi=[1, 2, 3, 4], rho=[1, 2, 3, 4])
    assert wlcs.verify_witness(inst, w).feasible
    assert wlcs.subs_membership(inst.X, inst.a1, ["a", "a", "a", "a"])
    best = wlcs.embed_dp(inst.Y, ["a", "a", "a"])
    assert frac(best.prob) >= Fraction(1, 4)
    assert list(best.positions) == sorted(best.positions)


def test_approximation_contracts():
    inst = wlcs.appendix_counterexample(wlcs.Rational(1, 1))
    p = wlcs.ptas_core(inst)
    assert p.d in (3, 4)
    assert wlcs.verify_witness(inst, p.witness).feasible

    r = wlcs.eptas(inst, wlcs.Rational(1, 5))
    assert r.length == 4
    assert wlcs.verify_witness(inst, r.witness).feasible

    assert wlcs.quantize_cost(wlcs.Rational(1, 2), wlcs.Rational(1, 4), 4) == 2
    assert wlcs.quantize_cost(wlcs.Rational(1, 8), wlcs.Rational(1, 4), 1) is None


def test_threshold_unification_round_trip():
    inst = wlcs.appendix_counterexample(wlcs.Rational(1, 1))  # a1=1/8 < a2=1/4
    k = 3
    uni = wlcs.unify_thresholds(inst, k)
    assert uni.k_prime == k + 1
    assert frac(uni.inst_prime.a1) == frac(uni.inst_prime.a2)
    assert wlcs.solve(uni.inst_prime).opt >= uni.k_prime

    full = wlcs.solve(inst).witness
    w = wlcs.Witness(s=full.s[:k], pi=full.pi[:k], rho=full.rho[:k])
    w_prime = wlcs.forward_map_witness(uni, w)
    assert wlcs.verify_witness(uni.inst_prime, w_prime).feasible
    back = wlcs.map_witness_back(uni, w_prime)
    assert (back.s, back.pi, back.rho) == (w.s, w.pi, w.rho)


def test_reductions_and_oracles():
    sp = wlcs.SubsetProductInstance(numbers=[2, 3], target=6)
    assert wlcs.subset_product_exists(sp)
    inst = wlcs.subset_product_to_wlcs(sp)
    assert frac(inst.a1) == Fraction(1, 72)
    assert wlcs.solve(inst).opt >= 2 + 2

    triangle = wlcs.Graph(n=3, edges=[(1, 2), (2, 3), (1, 3)])
    assert wlcs.perfect_code_exists(triangle, 1)
    reduced = wlcs.perfect_code_to_ksubset(triangle, 1)
    assert wlcs.subset_product_exists(reduced)
    assert list(reduced.numbers) == [30, 30, 30]

    formula = wlcs.Sat13Formula(num_vars=2, clauses=[(1, -2, 1)])
    assert wlcs.sat13_exists(formula)
    assert wlcs.subset_product_exists(wlcs.sat13_to_ksubset(formula, 1))

    assert wlcs.sieve_primes(5) == [2, 3, 5, 7, 11]


def test_resource_refusals_surface_as_python_exceptions():
    letters = [f"s{i}" for i in range(8)]
    rows = [[wlcs.Rational(1, 8)] * 8 for _ in range(12)]
    big = wlcs.Instance(
        letters=letters,
        x_rows=rows,
        y_rows=rows,
        a1=wlcs.Rational(1, 10**30),
        a2=wlcs.Rational(1, 10**30),
    )
    with pytest.raises(wlcs.ResourceLimitError):
        wlcs.brute_force_opt(big)
    with pytest.raises(wlcs.ResourceLimitError):
        wlcs.dfs_oracle(big)

    with pytest.raises(wlcs.ParseError):
        wlcs.parse_instance("WLCS 2\n")
