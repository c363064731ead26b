import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.series_service import (
    GeometricFactor,
    RationalTerm,
    RationalZeta,
    TruncSeries,
    expand_rational,
    first_difference,
    series_eq,
    series_mod2,
    series_mul,
    series_scale,
)
from store.errors import ApplicationError, TruncationError

ORDER = 40
coeff_lists = st.lists(st.integers(-9, 9), min_size=ORDER, max_size=ORDER)
factors = st.builds(GeometricFactor, st.integers(1, 8), st.sampled_from([1, -1]))
terms = st.builds(RationalTerm, st.integers(-5, 5), st.lists(factors, min_size=1, max_size=3).map(tuple))
closed_forms = st.lists(terms, max_size=4).map(lambda ts: RationalZeta(tuple(ts)))


def series(coeffs):
    return TruncSeries(len(coeffs), tuple(coeffs))


def test_from_terms_drops_terms_above_order():
    s = TruncSeries.from_terms({1: 2, 3: -1, 9: 7}, order=5)
    assert s.coeffs == (2, 0, -1, 0, 0)


def test_from_terms_rejects_constant_term():
    with pytest.raises(ApplicationError):
        TruncSeries.from_terms({0: 1}, order=3)


def test_index_zero_is_zero_and_beyond_order_raises():
    s = series([1, 2, 3])
    assert s[0] == 0
    assert s[3] == 3
    with pytest.raises(TruncationError):
        _ = s[4]


def test_binary_operations_truncate_to_smaller_order():
    a, b = series([1] * 5), series([1] * 3)
    assert (a + b).order == 3
    assert series_mul(a, b).order == 3


def test_square_of_geometric_series():
    # (T / (1 - T))^2 = sum (n - 1) T^n
    g = GeometricFactor(1, 1).expand(10)
    assert series_mul(g, g).coeffs == tuple(n - 1 for n in range(1, 11))


def test_geometric_factor_with_negative_sign_alternates():
    assert GeometricFactor(2, -1).expand(8).coeffs == (0, -1, 0, 1, 0, -1, 0, 1)


def test_expand_rational_sums_terms():
    r = RationalZeta(
        (
            RationalTerm(4, (GeometricFactor(1, -1), GeometricFactor(1, -1))),
            RationalTerm(0, (GeometricFactor(3, 1),)),
        )
    )
    # 4 T^2 / (1 + T)^2
    assert expand_rational(r, 6).coeffs == (0, 4, -8, 12, -16, 20)


def test_rational_term_needs_a_factor():
    with pytest.raises(ApplicationError):
        RationalTerm(1, ())


def test_series_eq_refuses_to_compare_past_the_order():
    a, b = series([1, 2]), series([1, 2, 3])
    assert series_eq(a, b, 2)
    with pytest.raises(TruncationError):
        series_eq(a, b, 3)


def test_first_difference_and_mod2():
    a, b = series([1, 2, 3, 4]), series([1, 2, 5, 4])
    assert first_difference(a, b) == 3
    assert first_difference(a, a) is None
    assert series_mod2(series([-3, 2, 5])).coeffs == (1, 0, 1)


def test_json_round_trip():
    s = series([0, -2, 7])
    assert TruncSeries.from_dict(s.to_dict()) == s


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(xs, ys, zs):
    a, b, c = series(xs), series(ys), series(zs)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == TruncSeries.zero(ORDER)


@settings(max_examples=200, deadline=None)
@given(coeff_lists, coeff_lists)
def test_mod2_commutes_with_products(xs, ys):
    a, b = series(xs), series(ys)
    assert series_mod2(a * b) == series_mod2(series_mod2(a) * series_mod2(b))


@settings(max_examples=200, deadline=None)
@given(closed_forms, closed_forms, st.integers(-4, 4))
def test_expand_rational_is_linear(r, s, k):
    assert expand_rational(r + s, ORDER) == expand_rational(r, ORDER) + expand_rational(s, ORDER)
    scaled = RationalZeta(tuple(RationalTerm(k * t.coeff, t.factors) for t in r.terms))
    assert expand_rational(scaled, ORDER) == series_scale(k, expand_rational(r, ORDER))


@pytest.mark.parametrize("n", range(1, 13))
@pytest.mark.parametrize("k", range(1, 9))
@pytest.mark.parametrize("eps", [1, -1])
def test_single_factor_has_k_terms_up_to_k_times_its_exponent(n, k, eps):
    s = expand_rational(RationalZeta((RationalTerm(1, (GeometricFactor(n, eps),)),)), k * n)
    assert len(s.nonzero()) == k
    assert [i for i, _ in s.nonzero()] == [n * j for j in range(1, k + 1)]
