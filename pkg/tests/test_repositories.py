import json

import pytest

from services.toric_service import build_resolution
from store.errors import ApplicationError, ResolutionValidationError, StorageError
from store.repositories.catalog_repo import CATALOG_COLUMNS, CatalogRepository
from store.repositories.resolution_repo import ResolutionRepository


@pytest.fixture
def repo():
    return ResolutionRepository()


# ---------- Resolution documents ----------

def test_save_and_load(tmp_path, repo, cusp_support, cusp_weights):
    data = build_resolution(cusp_support, cusp_weights)
    path = repo.save(tmp_path / "cusp.json", data)
    assert repo.load(path) == data
    doc = json.loads(path.read_text(encoding="utf-8"))
    assert doc["schema_version"] == 1
    assert not list(tmp_path.glob(".*.partial"))


def test_informational_fields_are_accepted(repo):
    doc = {
        "divisors": [{"id": "E1", "N": 3, "nu": 1, "exceptional": True}],
        "strata": [{"divisors": ["E1"], "chi_c": 1, "alpha_plus": 1, "alpha_minus": 1}],
        "rays": [[1, 0], [1, 1], [0, 1]],
        "weights": [1, 1],
        "hj": {"m/k": [1], "k/m": [1]},
    }
    assert repo.from_document(doc).divisor("E1").N == 3


@pytest.mark.parametrize(
    "patch",
    [
        {"extra": 1},
        {"divisors": [{"id": "E1", "N": "3", "nu": 1, "exceptional": True}]},
        {"divisors": [{"id": "E1", "N": 0, "nu": 1, "exceptional": True}]},
        {"strata": [{"divisors": [], "chi_c": 1, "alpha_plus": 1, "alpha_minus": 1}]},
        {"schema_version": 2},
    ],
)
def test_schema_violations(repo, patch):
    doc = {
        "divisors": [{"id": "E1", "N": 3, "nu": 1, "exceptional": True}],
        "strata": [{"divisors": ["E1"], "chi_c": 1, "alpha_plus": 1, "alpha_minus": 1}],
        **patch,
    }
    with pytest.raises(ApplicationError):
        repo.from_document(doc)


def test_invariant_violations_surface_after_the_schema(repo):
    doc = {
        "divisors": [{"id": "E1", "N": 3, "nu": 1, "exceptional": True}],
        "strata": [{"divisors": ["E1"], "chi_c": 1, "alpha_plus": 1, "alpha_minus": 0}],
    }
    with pytest.raises(ResolutionValidationError):
        repo.from_document(doc)


def test_unreadable_files(tmp_path, repo):
    with pytest.raises(StorageError):
        repo.load(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(StorageError):
        repo.load(bad)


# ---------- Catalogs ----------

RECORDS = [
    {"schema_version": 1, "germ": "x^2 + y^2", "exponents": [2, 2], "signs": [1, 1],
     "fukui": {"A": "2N ∪ {∞}", "A+": "2N ∪ {∞}", "A-": "{∞}"}, "zeta_digest": "0" * 16, "class_id": 0},
    {"schema_version": 1, "germ": "x^2 - y^2", "exponents": [2, 2], "signs": [1, -1],
     "fukui": {"A": "N≥2 ∪ {∞}", "A+": "N≥2 ∪ {∞}", "A-": "N≥2 ∪ {∞}"}, "zeta_digest": "1" * 16, "class_id": 1},
]


def test_catalog_write_and_read(tmp_path):
    repo = CatalogRepository()
    path = repo.write(tmp_path / "cat.jsonl", RECORDS)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 2
    assert "∞" in lines[0]
    df = repo.read(path)
    assert list(df["class_id"]) == [0, 1]
    assert set(CATALOG_COLUMNS) <= set(df.columns)


def test_catalog_bytes_are_deterministic(tmp_path):
    repo = CatalogRepository()
    a = repo.write(tmp_path / "a.jsonl", RECORDS).read_bytes()
    b = repo.write(tmp_path / "b.jsonl", [dict(reversed(list(r.items()))) for r in RECORDS]).read_bytes()
    assert a == b


def test_failed_write_leaves_nothing_behind(tmp_path):
    def records():
        yield RECORDS[0]
        raise RuntimeError("interrupted")

    target = tmp_path / "cat.jsonl"
    with pytest.raises(StorageError):
        CatalogRepository().write(target, records())
    assert not target.exists()
    assert list(tmp_path.iterdir()) == []


def test_catalog_line_that_is_not_json(tmp_path):
    path = tmp_path / "cat.jsonl"
    path.write_text('{"germ": "x^2"}\nnope\n', encoding="utf-8")
    with pytest.raises(StorageError):
        CatalogRepository().read(path)
    empty = tmp_path / "empty.jsonl"
    empty.write_text("", encoding="utf-8")
    assert CatalogRepository().read(empty).empty
