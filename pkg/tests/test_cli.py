import json

import pytest
from click.testing import CliRunner

from main import cli
from services.series_service import expand_rational


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, *args):
    result = runner.invoke(cli, ["--json", *args])
    return result, (json.loads(result.stdout) if result.exit_code == 0 else None)


# ---------- zeta ----------

def test_zeta_of_a_brieskorn_germ(runner):
    result, doc = run_json(runner, "zeta", "--germ", "x^3 - y^6", "--order", "30")
    assert result.exit_code == 0
    assert doc["schema_version"] == 1
    assert doc["order"] == 30
    total = doc["total"]
    assert total[:2] == [0, 0] and total[2] != 0
    assert [p + m for p, m in zip(doc["plus"], doc["minus"])] == total


def test_zeta_of_a_zero_germ(runner):
    result, doc = run_json(runner, "zeta", "--germ", "x^2 + y^2", "--order", "20")
    assert doc["plus"] == [0] * 20 and doc["minus"] == [0] * 20


def test_zeta_through_weights_matches_closed_form(runner, cusp_zeta_closed_form):
    result, doc = run_json(runner, "zeta", "--germ", "x^3 + x*y^5", "--weights", "5,2", "--order", "40")
    assert result.exit_code == 0
    assert doc["total"] == list(expand_rational(cusp_zeta_closed_form, 40).coeffs)


def test_zeta_mod2_of_the_cusp(runner):
    result, doc = run_json(runner, "zeta", "--germ", "x^3 + x*y^5", "--weights", "5,2", "--order", "60", "--mod2")
    plus = doc["plus"]
    for n in range(1, 61):
        assert plus[n - 1] == (1 if n % 3 == 0 and n % 15 else 0)


def test_zeta_text_output(runner):
    result = runner.invoke(cli, ["zeta", "--germ", "x^2", "--order", "6"])
    assert result.exit_code == 0
    assert "Z(T)" in result.stdout
    assert "2T^2 - 2T^4 + 2T^6 + O(T^7)" in result.stdout


def test_zeta_modified_form(runner):
    result, doc = run_json(runner, "zeta", "--germ", "x^3", "--order", "6", "--modified")
    assert doc["form"] == "modified"
    assert doc["tplus"] == [1, 1, 0, -1, -1, 0]


def test_zeta_from_a_resolution_file(runner, tmp_path):
    out = tmp_path / "r.json"
    result = runner.invoke(cli, ["resolve", "--germ", "x^3 - y^5", "--out", str(out)])
    assert result.exit_code == 0
    _, from_file = run_json(runner, "zeta", "--resolution", str(out), "--order", "40")
    _, closed = run_json(runner, "zeta", "--germ", "x^3 - y^5", "--order", "40")
    assert from_file["plus"] == closed["plus"] and from_file["minus"] == closed["minus"]


# ---------- fukui ----------

def test_fukui_text_output(runner):
    result = runner.invoke(cli, ["fukui", "--germ", "x^3 - y^5"])
    assert result.exit_code == 0
    assert result.stdout.count("3N ∪ 5N ∪ N≥16 ∪ {∞}") == 3


def test_fukui_json_for_same_sign_evens(runner):
    result, doc = run_json(runner, "fukui", "--germ", "x^4 + y^6")
    assert doc["rendered"] == {"A": "4N ∪ 6N ∪ {∞}", "A+": "4N ∪ 6N ∪ {∞}", "A-": "{∞}"}
    assert doc["sets"]["minus"]["infinity"] is True


def test_fukui_of_a_monomial(runner):
    result, doc = run_json(runner, "fukui", "--germ", "x^2")
    assert doc["rendered"]["A"] == "2N ∪ {∞}"


# ---------- resolve ----------

def test_resolve_prints_the_fan(runner):
    result, doc = run_json(runner, "resolve", "--germ", "x^3 + x*y^5", "--weights", "5,2")
    assert result.exit_code == 0
    assert doc["rays"] == [[1, 0], [3, 1], [5, 2], [2, 1], [1, 1], [0, 1]]
    assert doc["hj"] == {"m/k": [3, 2], "k/m": [1, 2, 3]}
    assert [d["N"] for d in doc["divisors"] if d["exceptional"]] == [8, 15, 6, 3]


def test_resolve_needs_weights_for_general_polynomials(runner):
    result = runner.invoke(cli, ["resolve", "--germ", "x^3 + x*y^5"])
    assert result.exit_code == 3
    assert "--weights" in result.stderr


# ---------- classify ----------

@pytest.mark.parametrize(
    "f, g, code",
    [
        ("x^3 + y^6", "x^3 - y^6", 0),
        ("x^3 + y^4", "x^3 - y^4", 1),
        ("x^2 + y^4 + z^4", "x^2 + y^6 + z^6", 2),
        ("x^3 + y^5 + z^7", "x^3 + y^5 + z^8", 1),
    ],
)
def test_classify_exit_codes(runner, f, g, code):
    result = runner.invoke(cli, ["classify", f, g])
    assert result.exit_code == code, result.output


def test_classify_json(runner):
    result = runner.invoke(cli, ["--json", "classify", "x^3 + y^4", "x^3 - y^4"])
    doc = json.loads(result.stdout)
    assert doc["verdict"]["kind"] == "not_equivalent"
    assert doc["verdict"]["witness"] == {"invariant": "fukui_plus", "at": 4}


def test_classify_parse_error(runner):
    result = runner.invoke(cli, ["classify", "x^3 +", "x^3 + y^4"])
    assert result.exit_code == 3
    assert "position 5" in result.stderr


def test_classify_rejects_non_brieskorn_input(runner):
    result = runner.invoke(cli, ["classify", "x^3 + x*y^5", "x^3 + y^4"])
    assert result.exit_code == 3


def test_usage_errors_exit_with_3(runner):
    assert runner.invoke(cli, ["classify", "x^3 + y^4"]).exit_code == 3
    assert runner.invoke(cli, ["table", "--name", "nope"]).exit_code == 3
    assert runner.invoke(cli, ["zeta", "--germ", "x^2", "--order", "0"]).exit_code == 3


# ---------- table / catalog ----------

def test_fingerprint_table_json(runner):
    result, doc = run_json(runner, "table", "--name", "table7", "--p", "3", "--k", "3")
    assert result.exit_code == 0
    assert len(doc["rows"]) == 12


def test_fukui_table_text(runner):
    result = runner.invoke(cli, ["table", "--name", "fukui-2var", "--pmax", "4"])
    assert result.exit_code == 0
    assert "x^2 + y^2" in result.stdout


def test_fingerprint_table_bad_parameters(runner):
    result = runner.invoke(cli, ["table", "--name", "table7", "--p", "4"])
    assert result.exit_code == 3


def test_catalog_command(runner, tmp_path):
    out = tmp_path / "cat.jsonl"
    result, doc = run_json(runner, "catalog", "--vars", "2", "--max-exp", "4", "--out", str(out))
    assert result.exit_code == 0
    assert doc["germs"] == len(out.read_text(encoding="utf-8").splitlines())
    assert doc["unresolved_pairs"] == []
