import pytest

from store.errors import ApplicationError
from tables.invariant_tables import (
    FUKUI_COLUMNS,
    FINGERPRINT_COLUMNS,
    fukui_2var_table,
    fingerprint_table,
    two_variable_germs,
)


def test_two_variable_germs_are_normalized_and_unique():
    germs = two_variable_germs(6)
    assert len(germs) == len(set(germs)) == 36
    assert all(g.signs[i] == 1 for g in germs for i, e in enumerate(g.exponents) if e % 2)


def test_fukui_table_rows_agree_with_the_fold():
    df = fukui_2var_table(8)
    assert list(df.columns) == FUKUI_COLUMNS
    assert df["fold_agrees"].all()
    assert df["resolution_agrees"].isna().all()
    row = df[df["germ"] == "x^3 - y^5"]
    assert row.empty
    row = df[df["germ"] == "x^3 + y^5"].iloc[0]
    assert row["A"] == "3N ∪ 5N ∪ N≥16 ∪ {∞}"


@pytest.mark.slow
def test_fukui_table_rows_agree_with_the_resolution():
    df = fukui_2var_table(12, check_resolution=True)
    assert df["fold_agrees"].all()
    assert df["resolution_agrees"].all()
    assert set(zip(df["p"], df["q"])) == {(p, q) for p in range(2, 13) for q in range(p, 13)}


@pytest.mark.parametrize("p, k", [(3, 1), (3, 3), (5, 1), (5, 3)])
def test_fingerprint_table_rows(p, k, fingerprint_expected):
    df = fingerprint_table(p, k)
    assert list(df.columns) == FINGERPRINT_COLUMNS
    assert len(df) == 12
    for record in df.to_dict(orient="records"):
        values = tuple(record[c] for c in FINGERPRINT_COLUMNS[1:])
        assert values == fingerprint_expected[record["row"]], record["row"]


@pytest.mark.parametrize("p, k", [(4, 3), (1, 3), (3, 2), (3, 0)])
def test_fingerprint_table_parameter_checks(p, k):
    with pytest.raises(ApplicationError):
        fingerprint_table(p, k)


def test_fukui_table_needs_pmax_of_two():
    with pytest.raises(ApplicationError):
        fukui_2var_table(1)
