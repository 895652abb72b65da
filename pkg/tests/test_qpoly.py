from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import box_partition_counts, gl_count_bruteforce
from smoothquiver import Quiver
from smoothquiver.qpoly import (
    DivisibilityError,
    PolyQ,
    RationalFunctionQ,
    exact_divide,
    expand_at_infinity,
    gauge_ratio,
    gl_order,
    partition_series,
    partitions,
    poly_gcd,
    q_binomial,
    q_multinomial,
    r_points,
)

small_polys = st.lists(st.integers(-5, 5), max_size=6).map(PolyQ)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())
points = st.sampled_from([Fraction(2), Fraction(3), Fraction(-1, 2), Fraction(5, 3)])


def test_polyq_basics():
    p = PolyQ((1, 2, 0, 3))
    assert p.degree == 3 and p.valuation == 0
    assert p.leading_coefficient == 3
    assert str(p) == "3*q^3 + 2*q + 1"
    assert str(PolyQ(0)) == "0"
    assert PolyQ((0, 0)) == PolyQ(0)
    assert p.coefficients == {0: 1, 1: 2, 3: 3}
    assert PolyQ.monomial(2).shift(1) == PolyQ.monomial(3)
    assert PolyQ({3: 2, 0: -1}) == PolyQ((-1, 0, 0, 2))


@given(small_polys, small_polys, points)
def test_ring_operations_match_evaluation(a, b, x):
    assert (a + b)(x) == a(x) + b(x)
    assert (a - b)(x) == a(x) - b(x)
    assert (a * b)(x) == a(x) * b(x)


@given(small_polys, nonzero_polys)
def test_exact_divide_roundtrip(a, b):
    assert exact_divide(a * b, b) == a


def test_exact_divide_rejects_remainders():
    with pytest.raises(DivisibilityError):
        exact_divide(PolyQ((1, 0, 1)), PolyQ((-1, 1)))
    with pytest.raises(ZeroDivisionError):
        exact_divide(PolyQ(1), PolyQ(0))


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_divides_both_and_contains_common_factor(a, b, c):
    g = poly_gcd(a * c, b * c)
    assert g.leading_coefficient > 0
    assert RationalFunctionQ(a * c, g).is_polynomial()
    assert RationalFunctionQ(b * c, g).is_polynomial()
    assert RationalFunctionQ(g, c).den.degree == 0


@given(small_polys, nonzero_polys, small_polys, nonzero_polys, points)
def test_rational_functions_match_evaluation(a, b, c, d, x):
    if b(x) == 0 or d(x) == 0:
        return
    f, g = RationalFunctionQ(a, b), RationalFunctionQ(c, d)
    assert f(x) == a(x) / b(x)
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)
    if g(x) != 0 and not g.is_zero():
        assert (f / g)(x) == f(x) / g(x)


def test_rational_function_canonical_form():
    f = RationalFunctionQ(PolyQ((-1, 0, 1)), PolyQ((-1, 1)))
    assert f.is_polynomial() and f.to_poly() == PolyQ((1, 1))
    g = RationalFunctionQ(PolyQ((2,)), PolyQ((0, -4)))
    assert (g.num, g.den) == (PolyQ((-1,)), PolyQ((0, 2)))
    assert RationalFunctionQ.monomial(-2) * RationalFunctionQ.monomial(2) == RationalFunctionQ(1)


def test_expand_at_infinity_geometric_series():
    f = RationalFunctionQ(PolyQ(1), PolyQ((-1, 1)))  # 1/(q-1) = q^-1 + q^-2 + ...
    assert expand_at_infinity(f, 4) == {-1: 1, -2: 1, -3: 1, -4: 1}


@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_gl_order_counts_invertible_matrices_over_f2(m):
    assert gl_order(m)(2) == gl_count_bruteforce(m, 2)


def test_gl_order_over_f3():
    assert gl_order(2)(3) == gl_count_bruteforce(2, 3) == 48


@pytest.mark.parametrize("n,k", [(0, 0), (3, 1), (4, 2), (5, 2), (6, 3)])
def test_q_binomial_counts_partitions_in_a_box(n, k):
    assert q_binomial(n, k) == PolyQ(box_partition_counts(k, n - k))


def test_q_binomial_edge_cases():
    assert q_binomial(4, 2) == PolyQ((1, 1, 2, 1, 1))
    assert q_binomial(3, 5).is_zero() and q_binomial(3, -1).is_zero()
    assert q_multinomial([1, 1, 1]) == q_binomial(3, 1) * q_binomial(2, 1)


def test_gauge_ratio_and_r_points():
    K = Quiver.kronecker(2)
    assert r_points(K, (1, 2)) == PolyQ.monomial(4)
    assert gauge_ratio(K, (1, 1)) == RationalFunctionQ(PolyQ.monomial(2), PolyQ((-1, 1)) ** 2)


def test_partitions_enumeration():
    ps = list(partitions(2, max_part=2))
    assert ps == [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)]
    assert list(partitions(0)) == [()]
    assert all(sum(p) <= 3 for p in partitions(3, max_weight=3))
    with pytest.raises(ValueError):
        list(partitions(2))


def test_partition_series_counts():
    # one vertex, one part: every weight once; two parts: floor(k/2)+1
    assert partition_series((1,), 4) == PolyQ((1, 1, 1, 1, 1))
    assert partition_series((2,), 4) == PolyQ((1, 1, 2, 2, 3))
    assert partition_series((1, 1), 2) == PolyQ((1, 2, 3))
