from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from services.resolution_service import (
    Divisor,
    ResolutionData,
    Stratum,
    dl_signed,
    dl_total,
    expand_signed,
    require_valid,
    validate_resolution,
)
from services.series_service import expand_rational
from services.zeta_service import zeta_monomial
from store.errors import ApplicationError, ResolutionValidationError


def single_divisor(m: int, alpha=(1, 1)) -> ResolutionData:
    """The germ ``x^m`` seen as its own resolution."""
    return ResolutionData(
        (Divisor("E1", m, 1, True),),
        (Stratum(("E1",), 1, *alpha),),
    )


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_odd_monomial_from_a_single_divisor(m):
    assert expand_signed(single_divisor(m), 40) == zeta_monomial(m, 1, 40)


@pytest.mark.parametrize("m", [2, 4, 6])
def test_even_monomial_sits_on_the_positive_side(m):
    assert expand_signed(single_divisor(m, (2, 0)), 40) == zeta_monomial(m, 1, 40)
    assert expand_signed(single_divisor(m, (0, 2)), 40) == zeta_monomial(m, -1, 40)


def test_total_is_the_sum_of_the_signed_parts():
    r = ResolutionData(
        (Divisor("E1", 2, 2, True), Divisor("S1", 1, 1, False), Divisor("S2", 1, 1, False)),
        (
            Stratum(("E1",), -1, 2, 0),
            Stratum(("E1",), -1, 0, 2),
            Stratum(("E1", "S1"), 1, 2, 2),
            Stratum(("S2", "E1"), 1, 2, 2),
        ),
    )
    signed = dl_signed(r)
    total = expand_rational(dl_total(r), 30)
    assert expand_rational(signed.plus, 30) + expand_rational(signed.minus, 30) == total
    # the two circle strata of E1 share one term
    assert len(dl_total(r).terms) == 3


def test_every_violation_is_reported():
    r = ResolutionData(
        (
            Divisor("E1", 0, 1, True),
            Divisor("E1", 3, 2, True),
            Divisor("S1", 1, 1, False),
        ),
        (
            Stratum(("E1",), 1, 1, 0),
            Stratum(("S1",), 1, 1, 1),
            Stratum(("E1", "S9"), 1, 2, 2),
        ),
    )
    codes = sorted(v.code for v in validate_resolution(r))
    assert codes == ["alpha-sum", "duplicate-id", "multiplicity", "no-exceptional", "unknown-divisor"]
    with pytest.raises(ResolutionValidationError) as info:
        require_valid(r)
    assert len(info.value.violations) == 5


def test_negative_chamber_counts_are_rejected():
    r = ResolutionData((Divisor("E1", 2, 1, True),), (Stratum(("E1",), 1, 3, -1),))
    assert [v.code for v in validate_resolution(r)] == ["alpha-sign"]


def test_evaluators_refuse_invalid_data():
    r = ResolutionData((Divisor("S1", 2, 1, False),), (Stratum(("S1",), 1, 2, 0),))
    with pytest.raises(ResolutionValidationError):
        dl_total(r)


def test_document_round_trip():
    r = single_divisor(3)
    assert ResolutionData.from_dict(r.to_dict()) == r
    with pytest.raises(ApplicationError):
        ResolutionData.from_dict({"divisors": [{"id": "E1"}], "strata": []})


@st.composite
def resolutions(draw):
    count = draw(st.integers(1, 3))
    divisors = [
        Divisor(f"E{k}", draw(st.integers(1, 10)), draw(st.integers(1, 6)), True)
        for k in range(1, count + 1)
    ]
    if draw(st.booleans()):
        divisors.append(Divisor("S1", 1, 1, False))
    strata = []
    for _ in range(draw(st.integers(0, 6))):
        ids = draw(st.lists(st.sampled_from([d.id for d in divisors]), min_size=1, max_size=2, unique=True))
        if not any(i.startswith("E") for i in ids):
            ids.append("E1")
        plus = draw(st.integers(0, 2 ** len(ids)))
        strata.append(Stratum(tuple(ids), draw(st.integers(-3, 3)), plus, 2 ** len(ids) - plus))
    return ResolutionData(tuple(divisors), tuple(strata))


@settings(max_examples=100, deadline=None)
@given(resolutions())
def test_only_the_parity_of_nu_matters(r):
    shifted = ResolutionData(tuple(replace(d, nu=d.nu + 2) for d in r.divisors), r.strata)
    assert expand_rational(dl_total(shifted), 40) == expand_rational(dl_total(r), 40)
    assert expand_signed(shifted, 40) == expand_signed(r, 40)


@settings(max_examples=100, deadline=None)
@given(resolutions(), st.data())
def test_evaluators_are_additive_over_strata(r, data):
    cut = data.draw(st.integers(0, len(r.strata)))
    head = ResolutionData(r.divisors, r.strata[:cut])
    rest = ResolutionData(r.divisors, r.strata[cut:])
    assert expand_rational(dl_total(r), 40) == (
        expand_rational(dl_total(head), 40) + expand_rational(dl_total(rest), 40)
    )
    whole, a, b = expand_signed(r, 40), expand_signed(head, 40), expand_signed(rest, 40)
    assert whole.plus == a.plus + b.plus
    assert whole.minus == a.minus + b.minus
