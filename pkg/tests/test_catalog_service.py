import pytest

from services.catalog_service import build_catalog, enumerate_germs, zeta_digest
from services.zeta_service import BrieskornGerm
from store.errors import ApplicationError


def test_enumeration_is_normalized_and_sorted():
    germs = enumerate_germs(2, 6)
    assert len(germs) == 36
    assert germs[0] == BrieskornGerm.of((2, 1), (2, 1))
    assert germs == sorted(germs, key=lambda g: (g.exponents, tuple(-s for s in g.signs)))


def test_digest_is_stable_and_sign_sensitive():
    a = zeta_digest(BrieskornGerm.of((3, 1), (4, 1)))
    assert a == zeta_digest(BrieskornGerm.of((3, 1), (4, 1)))
    assert a != zeta_digest(BrieskornGerm.of((3, 1), (4, -1)))
    assert len(a) == 16


def test_two_variable_catalog_merges_only_the_exceptional_pair():
    catalog = build_catalog(2, 6)
    assert len(catalog.records) == 36
    assert catalog.class_count == 35
    assert catalog.unresolved == []
    by_germ = {r["germ"]: r["class_id"] for r in catalog.records}
    assert by_germ["x^3 + y^6"] == by_germ["x^3 - y^6"]
    assert by_germ["x^3 + y^4"] != by_germ["x^3 - y^4"]


def test_catalog_records_are_reproducible():
    assert build_catalog(2, 4).records == build_catalog(2, 4).records


@pytest.mark.slow
def test_three_variable_catalog_reports_the_open_family():
    catalog = build_catalog(3, 4)
    assert ("x^2 + y^2 + z^2", "x^2 + y^4 + z^4") in catalog.unresolved


def test_catalog_dimensions():
    with pytest.raises(ApplicationError):
        build_catalog(4, 3)
