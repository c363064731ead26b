from math import gcd

import pytest

from services.resolution_service import dl_total, expand_signed, validate_resolution
from services.series_service import expand_rational, first_difference, series_mod2
from services.toric_service import (
    SupportPoly,
    WeightVector,
    build_resolution,
    chart_unit,
    divisor_mults,
    hj_cfrac,
    infer_brieskorn_weights,
    ray_vectors,
    resolve_brieskorn,
)
from services.zeta_service import BrieskornGerm, ts_mod2, zeta_brieskorn, zeta_monomial
from store.errors import DegenerateError, NotCoprimeError, NotWeightedHomogeneousError

SIGNS = [(1, 1), (1, -1), (-1, 1), (-1, -1)]


# ---------- Fan ----------

@pytest.mark.parametrize(
    "m, k, expected",
    [(5, 2, [3, 2]), (2, 5, [1, 2, 3]), (7, 1, [7]), (1, 1, [1]), (4, 0, [])],
)
def test_hj_cfrac(m, k, expected):
    assert hj_cfrac(m, k) == expected


def test_hj_cfrac_rejects_common_factors():
    with pytest.raises(NotCoprimeError):
        hj_cfrac(6, 4)
    with pytest.raises(NotCoprimeError):
        WeightVector(4, 6)


def test_rays_for_five_two():
    assert ray_vectors(WeightVector(5, 2)).rays == ((1, 0), (3, 1), (5, 2), (2, 1), (1, 1), (0, 1))


@pytest.mark.parametrize("m", range(1, 51))
def test_fan_is_unimodular_and_contains_the_weight(m):
    for k in (k for k in range(1, 51) if gcd(m, k) == 1):
        rays = ray_vectors(WeightVector(m, k)).rays
        assert rays[0] == (1, 0) and rays[-1] == (0, 1)
        assert (m, k) in rays
        for (a, b), (c, d) in zip(rays, rays[1:]):
            assert a * d - b * c == 1, (m, k)


def test_divisor_multiplicities(cusp_support):
    got = [divisor_mults(cusp_support, v) for v in [(3, 1), (5, 2), (2, 1), (1, 1)]]
    assert [(d.N, d.nu) for d in got] == [(8, 4), (15, 7), (6, 3), (3, 2)]


def test_chart_unit_on_the_weight_ray(cusp_support):
    assert chart_unit(cusp_support, (5, 2), (2, 1)) == {0: 1, 1: 1}


# ---------- Resolution of x^3 + x y^5 ----------

def test_cusp_divisors(cusp_support, cusp_weights):
    r = build_resolution(cusp_support, cusp_weights)
    exceptional = [(d.id, d.N, d.nu) for d in r.divisors if d.exceptional]
    assert exceptional == [("E1", 8, 4), ("E2", 15, 7), ("E3", 6, 3), ("E4", 3, 2)]
    strict = [(d.id, d.N) for d in r.divisors if not d.exceptional]
    assert strict == [("S1", 1), ("S2", 1)]


def test_cusp_strata(cusp_support, cusp_weights):
    r = build_resolution(cusp_support, cusp_weights)
    chi = {}
    for s in r.strata:
        if len(s.divisor_ids) == 1:
            chi[s.divisor_ids[0]] = chi.get(s.divisor_ids[0], 0) + s.chi_c
    assert chi == {"E1": -2, "E2": -3, "E3": -2, "E4": -1}
    points = sorted(s.divisor_ids for s in r.strata if len(s.divisor_ids) == 2)
    assert points == [("E1", "E2"), ("E1", "S1"), ("E2", "E3"), ("E2", "S2"), ("E3", "E4")]
    assert all(s.chi_c == 1 for s in r.strata if len(s.divisor_ids) == 2)
    assert validate_resolution(r) == []


def test_cusp_total_zeta_matches_closed_form(cusp_support, cusp_weights, cusp_zeta_closed_form):
    r = build_resolution(cusp_support, cusp_weights)
    assert expand_rational(dl_total(r), 90) == expand_rational(cusp_zeta_closed_form, 90)
    assert expand_signed(r, 90).total() == expand_rational(cusp_zeta_closed_form, 90)


def test_cusp_plus_mod2_and_its_sum_with_a_cube(cusp_support, cusp_weights):
    order = 60
    plus = series_mod2(expand_signed(build_resolution(cusp_support, cusp_weights), order).plus)
    for n in range(1, order + 1):
        assert plus[n] == (1 if n % 3 == 0 and n % 15 else 0)
    z3 = series_mod2(zeta_monomial(3, 1, order).plus)
    combined = ts_mod2(plus, z3)
    assert [n for n in range(1, order + 1) if combined[n]] == list(range(3, order + 1, 3))


def test_adding_a_cube_separates_the_cusp_from_x3_plus_y7(cusp_support, cusp_weights):
    order = 100
    z3 = series_mod2(zeta_monomial(3, 1, order).plus)
    cusp = series_mod2(expand_signed(build_resolution(cusp_support, cusp_weights), order).plus)
    brieskorn = series_mod2(expand_signed(resolve_brieskorn(BrieskornGerm.of((3, 1), (7, 1))), order).plus)
    with_cusp, with_brieskorn = ts_mod2(cusp, z3), ts_mod2(brieskorn, z3)

    assert [n for n in range(1, order + 1) if with_cusp[n]] == [n for n in range(1, order + 1) if n % 3 == 0]
    assert [n for n in range(1, order + 1) if with_brieskorn[n]] == [
        n for n in range(1, order + 1) if n % 3 == 0 or n % 7 == 0
    ]
    assert first_difference(with_cusp, with_brieskorn) == 7


# ---------- Small cases and errors ----------

def test_positive_definite_quadric_has_zero_zeta():
    r = resolve_brieskorn(BrieskornGerm.of((2, 1), (2, 1)))
    assert [(s.chi_c, s.alpha_plus, s.alpha_minus) for s in r.strata] == [(0, 2, 0)]
    assert expand_signed(r, 30).is_zero()


def test_saddle_has_two_branches():
    r = resolve_brieskorn(BrieskornGerm.of((2, 1), (2, -1)))
    assert [d.id for d in r.divisors] == ["E1", "S1", "S2"]
    total = expand_rational(dl_total(r), 30)
    assert total.coeffs == tuple(0 if n == 1 else 4 * (-1) ** n * (n - 1) for n in range(1, 31))


def test_not_weighted_homogeneous():
    s = SupportPoly.from_terms({(3, 0): 1, (0, 5): 1, (1, 1): 1})
    with pytest.raises(NotWeightedHomogeneousError):
        build_resolution(s, WeightVector(5, 3))


def test_degenerate_face():
    s = SupportPoly.from_terms({(2, 0): 1, (1, 1): 2, (0, 2): 1})
    with pytest.raises(DegenerateError):
        build_resolution(s, WeightVector(1, 1))


def test_inferred_weights():
    assert infer_brieskorn_weights(3, 5) == WeightVector(5, 3)
    assert infer_brieskorn_weights(4, 6) == WeightVector(3, 2)
    assert infer_brieskorn_weights(4, 4) == WeightVector(1, 1)


# ---------- Cross-check against Thom-Sebastiani ----------

@pytest.mark.slow
@pytest.mark.parametrize("p", range(2, 9))
@pytest.mark.parametrize("q", range(2, 9))
@pytest.mark.parametrize("signs", SIGNS)
def test_resolution_zeta_matches_thom_sebastiani(p, q, signs):
    g = BrieskornGerm.of((p, signs[0]), (q, signs[1]))
    assert expand_signed(resolve_brieskorn(g), 60) == zeta_brieskorn(g, 60)
