import threading
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

import oracles
from conftest import instances
from smoothquiver import (
    ConsistencyError,
    PdCache,
    PolyQ,
    PreconditionError,
    Quiver,
    QuiverInputError,
    RationalFunctionQ,
    Stability,
    TwistedSeries,
    admissible_decompositions,
    p_d,
    q_binomial,
    semi_admissible_decompositions,
    series_engine,
    smooth_model_nonempty,
    smooth_model_poincare_recursion,
    smooth_model_poincare_series,
    smooth_model_poincare_summation,
    sst_nonempty,
    stable_poincare,
)

Q_ = RationalFunctionQ.monomial(1)
K2 = Quiver.kronecker(2)
TH10 = Stability([1, 0])
TWO_CYCLE = PolyQ({8: 1, 7: 2, 6: 5, 5: 6, 4: 7, 3: 4, 2: 2})

ENGINES = [smooth_model_poincare_recursion, smooth_model_poincare_summation, smooth_model_poincare_series]


def rf(num, den=(1,)):
    return RationalFunctionQ(PolyQ(num), PolyQ(den))


# -- decompositions ----------------------------------------------------------

def test_admissible_decompositions_of_kronecker():
    assert sorted(admissible_decompositions(K2, TH10, (1, 1))) == [((1, 0), (0, 1)), ((1, 1),)]
    assert list(admissible_decompositions(K2, Stability.zero(2), (2, 1))) == [((2, 1),)]


def test_semi_admissible_decompositions_of_kronecker():
    got = sorted(semi_admissible_decompositions(K2, TH10, (1, 1)))
    assert got == [(((1, 0), (0, 1)), 2), (((1, 1),), 1)]


def test_semi_admissible_at_zero_stability_is_every_composition():
    d = (2, 1)
    got = sorted(semi_admissible_decompositions(K2, Stability.zero(2), d))
    assert got == sorted((p, 1) for p in oracles.compositions(d))


@settings(max_examples=40)
@given(instances(max_entry=2))
def test_decomposition_streams_match_brute_force(inst):
    Q, d, _, theta = inst
    assert sorted(admissible_decompositions(Q, theta, d)) == sorted(oracles.admissible(theta, d))
    assert sorted(semi_admissible_decompositions(Q, theta, d)) == sorted(oracles.semi_admissible(theta, d))


def test_admissible_count_ignores_vertex_order():
    Q = Quiver(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")])
    R = Quiver(["c", "b", "a"], [("a", "b"), ("b", "c"), ("c", "a")])
    a = len(list(admissible_decompositions(Q, Stability([2, 0, -1]), (1, 2, 1))))
    b = len(list(admissible_decompositions(R, Stability([-1, 0, 2]), (1, 2, 1))))
    assert a == b


def test_zero_vector_is_rejected_by_streams():
    with pytest.raises(QuiverInputError):
        list(admissible_decompositions(K2, TH10, (0, 0)))
    with pytest.raises(QuiverInputError):
        list(semi_admissible_decompositions(K2, TH10, (0, 0)))


# -- P_d ---------------------------------------------------------------------

def test_p_d_basic_values():
    assert p_d(K2, TH10, (0, 0)) == RationalFunctionQ(1)
    assert p_d(Quiver(["v"]), Stability.zero(1), (1,)) == rf((1,), (-1, 1))
    assert p_d(K2, TH10, (1, 1)) == rf((1, 1), (-1, 1))


@pytest.mark.parametrize(
    "d,expected",
    [
        ((2, 2), rf((0, 2, 1, 1), (1, -1, -1, 1))),
        ((1, 2), rf((1,), (-1, 1))),
        ((2, 3), rf((1,), (-1, 1))),
    ],
)
def test_p_d_frozen_kronecker_values(d, expected):
    assert p_d(K2, TH10, d) == expected == oracles.pd_oracle(K2, TH10, d)


@settings(max_examples=40)
@given(instances(max_entry=2))
def test_p_d_matches_brute_force(inst):
    Q, d, _, theta = inst
    assert p_d(Q, theta, d, PdCache()) == oracles.pd_oracle(Q, theta, d)


def test_pd_cache_is_consistent_and_thread_safe():
    Q = Quiver.kronecker(3)
    cache = PdCache()
    fresh = p_d(Q, TH10, (2, 3), PdCache())
    results = []

    def work():
        results.append(p_d(Q, TH10, (2, 3), cache))

    threads = [threading.Thread(target=work) for _ in range(6)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == fresh for r in results)
    assert len(cache) > 0
    assert p_d(Q, TH10, (2, 3), cache) == fresh


# -- stable Poincare polynomial ----------------------------------------------

def test_stable_poincare_of_projective_line():
    assert stable_poincare(K2, TH10, (1, 1)) == PolyQ((1, 1))


def test_stable_poincare_of_five_points_on_the_line():
    S5 = Quiver.subspace(5)
    p = stable_poincare(S5, Stability([-1, 0, 0, 0, 0, 0]), (2, 1, 1, 1, 1, 1))
    assert p.has_nonnegative_coefficients()
    assert p.degree == 2  # dimension 5 - 3 of five points on P^1 modulo PGL_2


def test_stable_poincare_requires_coprime():
    with pytest.raises(PreconditionError):
        stable_poincare(K2, TH10, (2, 2))


# -- smooth model engines ----------------------------------------------------

@pytest.mark.parametrize("engine", ENGINES)
def test_engines_on_reference_instances(engine, two_cycle_quiver):
    assert engine(Quiver.loops(3), Stability.zero(1), (1,), (1,)) == PolyQ.monomial(3)
    assert engine(two_cycle_quiver, Stability.zero(2), (2, 2), (2, 2)) == TWO_CYCLE
    loop_arrow = Quiver(["i", "j"], [("i", "i"), ("i", "j")])
    assert engine(loop_arrow, Stability.zero(2), (1, 0), (0, 1)).is_zero()


@pytest.mark.parametrize(
    "Q,theta,d,n,expected",
    [
        (K2, TH10, (1, 1), (1, 0), PolyQ((1, 1))),
        (K2, TH10, (2, 2), (1, 0), PolyQ((1, 1, 1))),
        (K2, TH10, (1, 2), (1, 1), PolyQ((1, 1, 1))),
        (K2, TH10, (2, 3), (1, 0), PolyQ((1, 1))),
        (K2, TH10, (2, 2), (1, 1), PolyQ((1, 2, 4, 2, 1))),
        (Quiver.kronecker(3), TH10, (2, 2), (1, 0), PolyQ((1, 2, 3, 3, 3, 2, 1))),
        (Quiver.loops(2), Stability.zero(1), (2,), (1,), PolyQ({6: 1, 5: 1})),
        (Quiver.loops(2), Stability.zero(1), (3,), (1,), PolyQ({12: 1, 11: 1, 10: 2, 9: 1})),
    ],
)
@pytest.mark.parametrize("engine", ENGINES)
def test_engines_on_frozen_values(engine, Q, theta, d, n, expected):
    assert engine(Q, theta, d, n) == expected


def test_frozen_values_agree_with_oracles():
    assert oracles.summation_oracle(K2, TH10, (2, 2), (1, 1)) == RationalFunctionQ(PolyQ((1, 2, 4, 2, 1)))
    assert oracles.recursion_oracle(K2, TH10, (2, 3), (1, 0)) == RationalFunctionQ(PolyQ((1, 1)))
    assert oracles.summation_oracle(Quiver.loops(2), Stability.zero(1), (3,), (1,)) == RationalFunctionQ(
        PolyQ({12: 1, 11: 1, 10: 2, 9: 1})
    )


@settings(max_examples=40)
@given(instances(max_entry=2))
def test_engines_match_brute_force_sums(inst):
    Q, d, n, theta = inst
    want = oracles.summation_oracle(Q, theta, d, n)
    assert want == oracles.recursion_oracle(Q, theta, d, n)
    assert RationalFunctionQ(smooth_model_poincare_summation(Q, theta, d, n)) == want
    assert RationalFunctionQ(smooth_model_poincare_recursion(Q, theta, d, n, PdCache())) == want


@given(instances())
def test_engine_outputs_are_positive_polynomials_of_the_right_degree(inst):
    Q, d, n, theta = inst
    p = smooth_model_poincare_recursion(Q, theta, d, n, PdCache())
    assert p.has_nonnegative_coefficients()
    assert p.is_zero() or p.degree == sum(a * b for a, b in zip(n, d)) - Q.euler_form(d, d)


def test_zero_dimension_vector_and_zero_framing():
    assert smooth_model_poincare_recursion(K2, TH10, (0, 0), (1, 0)) == PolyQ(1)
    assert smooth_model_poincare_series(K2, TH10, (0, 0), (1, 0)) == PolyQ(1)
    with pytest.raises(QuiverInputError):
        smooth_model_poincare_summation(K2, TH10, (0, 0), (1, 0))
    for engine in ENGINES:
        with pytest.raises(QuiverInputError):
            engine(K2, TH10, (1, 1), (0, 0))


# -- closed forms ------------------------------------------------------------

def kronecker_pd_formula(m, k):
    s = sum(
        (RationalFunctionQ(q_binomial(m, l) * q_binomial(m, 2 * k - l)) * Q_ ** ((m - 2 * k + l) * l)
         for l in range(k)),
        RationalFunctionQ(0),
    )
    return (RationalFunctionQ(q_binomial(2 * m, 2 * k)) / rf((1, 1)) - s) / rf((0, 1, -2, 1))


def kronecker_smooth_formula(m, k, n):
    N = Q_ ** (n[0] + k * n[1])
    s = sum(
        (RationalFunctionQ(q_binomial(m, l) * q_binomial(m, 2 * k - l)) * Q_ ** ((m - 2 * k + l) * l)
         for l in range(k)),
        RationalFunctionQ(0),
    )
    inner = (N + 1) / rf((1, 1)) * RationalFunctionQ(q_binomial(2 * m, 2 * k)) - (N + 1) * s \
        - Q_ ** ((m - k) * k) * RationalFunctionQ(q_binomial(m, k) ** 2)
    return (N - 1) / rf((0, 1, -2, 1)) * inner


@pytest.mark.parametrize("m,k", [(2, 1), (3, 1), (4, 1), (4, 2)])
def test_kronecker_closed_form_for_p_d(m, k):
    Q = Quiver.kronecker(m)
    assert p_d(Q, TH10, (2, 2 * k)) == kronecker_pd_formula(m, k)
    # the half vector contributes its stable Poincare polynomial
    assert stable_poincare(Q, TH10, (1, k)) == q_binomial(m, k)


@pytest.mark.parametrize("m,k", [(2, 1), (3, 1), (4, 2)])
@pytest.mark.parametrize("n", [(1, 0), (0, 1), (1, 1), (2, 1)])
def test_kronecker_closed_form_for_smooth_model(m, k, n):
    Q = Quiver.kronecker(m)
    want = kronecker_smooth_formula(m, k, n)
    assert RationalFunctionQ(smooth_model_poincare_summation(Q, TH10, (2, 2 * k), n)) == want


def points_on_line_formulas(r):
    h = r // 2
    low = sum((RationalFunctionQ(comb(r, l)) * Q_ ** l for l in range(h)), RationalFunctionQ(0))
    pd = ((Q_ + 1) ** (r - 1) - low) / rf((0, 1, -2, 1))
    smooth = ((Q_ + 1) ** r - (Q_ + 1) * low - Q_ ** h * comb(r, h)) / rf((0, -1, 1))
    return pd, smooth


@pytest.mark.parametrize("r", [2, 4, 6])
def test_points_on_the_projective_line(r):
    Q = Quiver.subspace(r)
    theta = Stability([-1] + [0] * r)
    d, n = (2,) + (1,) * r, (1,) + (0,) * r
    pd, smooth = points_on_line_formulas(r)
    assert p_d(Q, theta, d) == pd
    for engine in ENGINES:
        assert RationalFunctionQ(engine(Q, theta, d, n)) == smooth


def test_points_on_the_line_r4_value():
    pd, smooth = points_on_line_formulas(4)
    assert pd == rf((0, -1, 3, 1)) / rf((0, 1, -2, 1))
    assert smooth == RationalFunctionQ(PolyQ((1, 5, 1)))


# -- series ------------------------------------------------------------------

def test_series_engine_slope_class_and_cap(two_cycle_quiver):
    out = series_engine(two_cycle_quiver, Stability.zero(2), "all", (2, 2), (2, 2))
    assert out[(0, 0)] == PolyQ(1)
    assert out[(2, 2)] == TWO_CYCLE
    cls = series_engine(K2, TH10, Fraction(1, 2), (2, 2), (1, 1))
    assert set(cls) == {(0, 0), (1, 1), (2, 2)}
    for d in [(1, 1), (2, 2)]:
        assert cls[d] == smooth_model_poincare_summation(K2, TH10, d, (1, 1))
    with pytest.raises(QuiverInputError):
        series_engine(K2, TH10, "all", (2, 2), (1, 1))


def test_twisted_series_multiplication_and_inverse():
    one = {(0, 0): 1}
    A = TwistedSeries.from_coefficients(K2, (2, 2), {(0, 0): 1, (1, 0): 1, (0, 1): 1})
    # t^(1,0) t^(0,1) = q^{-<(1,0),(0,1)>} t^(1,1) = q^2 t^(1,1)
    prod = A * A
    assert prod.coefficient((1, 1)) == RationalFunctionQ(PolyQ.monomial(2) + 1)
    assert prod.coefficient((2, 0)) == RationalFunctionQ.monomial(-1)
    inv = A.inverse()
    unit = TwistedSeries.from_coefficients(K2, (2, 2), one)
    for s in (A * inv, inv * A):
        assert all(s.coefficient(e) == unit.coefficient(e) for e in s.index_set())
    assert A.is_invertible()
    assert not TwistedSeries.from_coefficients(K2, (2, 2), {(1, 0): 1}).is_invertible()
    with pytest.raises(ZeroDivisionError):
        TwistedSeries.from_coefficients(K2, (2, 2), {(1, 0): 1}).inverse()


def test_twisted_series_respects_slope_class():
    S = TwistedSeries(K2, (2, 2), TH10, Fraction(1, 2))
    assert S.index_set() == [(0, 0), (1, 1), (2, 2)]
    with pytest.raises(QuiverInputError):
        TwistedSeries.from_coefficients(K2, (2, 2), {(1, 0): 1}, TH10, Fraction(1, 2))


# -- non-emptiness -----------------------------------------------------------

def test_sst_nonempty_examples():
    assert sst_nonempty(K2, Stability.zero(2), (2, 3))
    assert sst_nonempty(K2, TH10, (1, 1))
    assert not sst_nonempty(Quiver(["a", "b"]), TH10, (1, 1))
    assert not sst_nonempty(K2, TH10, (1, 3))  # more than m = 2 copies at the sink


@given(instances(max_entry=2))
def test_smooth_model_nonempty_matches_engine(inst):
    Q, d, n, theta = inst
    p = smooth_model_poincare_recursion(Q, theta, d, n, PdCache())
    assert smooth_model_nonempty(Q, theta, d, n) == (not p.is_zero())


def test_consistency_error_is_an_assertion():
    assert issubclass(ConsistencyError, AssertionError)
