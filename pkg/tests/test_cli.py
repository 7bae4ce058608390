import json
import subprocess
import sys

import pytest

from hyperforge import catalog
from hyperforge.census import CensusError, census, census_order
from hyperforge.cli import run
from hyperforge.hyperstruct import krasner, signs
from hyperforge.morphisms import iso_search


def ok(*argv):
    code, text = run(list(argv))
    assert code == 0, text
    return json.loads(text)


# --------------------------------------------------------------- catalog


def test_catalog_tables():
    assert catalog.table("krasner").n == 2
    assert catalog.table("gf:7").n == 7
    assert catalog.table("gf:7/order:3").n == 3
    assert catalog.table("gf:5/{1,4}").n == 3
    assert catalog.table("gf:5/units").n == 2


@pytest.mark.parametrize("spec", ["nosuch", "gf:6", "gf:7/order:4", "gf:5/{1,9}", "phase", "missing/file.json"])
def test_catalog_rejects(spec):
    with pytest.raises(catalog.CatalogError):
        catalog.table(spec)


def test_catalog_rings_and_ideals():
    R = catalog.ring("m2:gf:2")
    assert R.n == 16
    L = catalog.left_ideal(R, "col0")
    assert len(L) == 4
    Z = catalog.ring("z:12")
    assert catalog.left_ideal(Z, "mult:3") == frozenset(Z.index(x) for x in ("0", "3", "6", "9"))
    with pytest.raises(catalog.CatalogError):
        catalog.left_ideal(Z, "col0")


def test_catalog_quotient_count():
    # one subgroup per divisor of q - 1
    divisors = {2: 1, 3: 2, 4: 2, 5: 3, 7: 4, 8: 2, 9: 4}
    assert sum(1 for _ in catalog.all_quotients(9)) == sum(divisors.values())


# ---------------------------------------------------------------- census


def test_census_counts():
    assert [len(census_order(n)) for n in range(1, 5)] == [1, 2, 5, 7]


def test_census_realizability():
    two = census_order(2)
    assert iso_search(two[1].table, krasner()).found
    assert all(e.realizable for e in two)
    three = census_order(3)
    sign = [e for e in three if iso_search(e.table, signs()).found]
    assert len(sign) == 1 and not sign[0].realizable


def test_census_entries_are_hyperfields():
    from hyperforge.hyperstruct import check_hyperfield
    for e in census(4):
        if e.table.n > 1:
            assert check_hyperfield(e.table).passed
        assert e.to_json()["realizable"] == e.realizable


def test_census_guard():
    with pytest.raises(CensusError):
        census(5)
    with pytest.raises(CensusError):
        census_order(0)


# ------------------------------------------------------------------- cli


def test_check_krasner():
    doc = ok("check", "--table", "krasner")
    assert doc["schema"] == "hyperforge/1" and doc["passed"]


def test_check_symbolic_with_gap():
    doc = ok("check", "--table", "phase", "--gap")
    assert doc["passed"] and doc["field"] == "phase"


def test_check_broken_table_exits_one(tmp_path):
    doc = krasner().to_json()
    doc["hsum"][1][1] = [1]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(doc))
    code, text = run(["check", "--table", str(path)])
    assert code == 1
    assert json.loads(text)["passed"] is False


def test_quotient_json_and_csv():
    doc = ok("quotient", "--base", "gf:5", "--subgroup", "order:2")
    assert doc["table"]["elements"] == ["0", "1", "2"]
    code, text = run(["quotient", "--base", "gf:7", "--subgroup", "order:3", "--format", "csv"])
    assert code == 0
    assert text.splitlines()[0] == "+,0,1,3"


def test_iso_found_and_missing():
    assert ok("iso", "--a", "gf:3/units", "--b", "krasner")["passed"]
    code, text = run(["iso", "--a", "gf:3/units", "--b", "signs"])
    assert code == 1 and json.loads(text)["iso"] is None


def test_mhyper():
    doc = ok("mhyper", "--ring", "m2:gf:2", "--left-ideal", "col0")
    assert len(doc["structure"]["elements"]) == 4


def test_pumpluen():
    doc = ok("pumpluen", "--field", "gf:4", "--twist", "frob:1", "--modulus", "x^2+x+1", "--crosscheck", "5")
    assert doc["size"] == 16
    assert doc["nonassociative_witness"] is not None
    assert doc["crosscheck"]["passed"]


def test_tensor(tmp_path):
    out = tmp_path / "t.json"
    code, text = run(["tensor", "--left", "fixture:left", "--right", "fixture:right",
                      "--shuffles", "2", "--out", str(out)])
    assert code == 0 and text == ""
    doc = json.loads(out.read_text())
    assert doc["terms"] == 404 and len(doc["classes"]) == 2


def test_tensor_budget_exhaustion():
    code, text = run(["tensor", "--left", "fixture:left", "--right", "fixture:right", "--budget", "10"])
    assert code == 2
    assert "exceeds 10 terms" in json.loads(text)["error"]


def test_pairs_commands():
    assert ok("pairs", "--pair", "supertropical")["passed"]
    code, text = run(["pairs", "--pair", "infinity:units:5", "--require-negation"])
    assert code == 1
    assert ok("pairs", "--table", "signs", "--require-negation")["passed"]


def test_census_cli():
    doc = ok("census", "--max-order", "3")
    assert doc["count"] == 8
    code, text = run(["census", "--max-order", "3", "--format", "csv"])
    rows = text.splitlines()
    assert rows[0] == "name,order,realizable,realized_by"
    assert len(rows) == 9


@pytest.mark.parametrize("argv", [
    ["census", "--max-order", "5"],
    ["check", "--table", "nosuch"],
    ["quotient", "--base", "gf:6", "--subgroup", "units"],
    ["frobnicate"],
])
def test_usage_errors_exit_two(argv):
    code, text = run(argv)
    assert code == 2
    assert "error" in json.loads(text)


def test_budget_env(monkeypatch):
    monkeypatch.setenv("HYPERFORGE_BUDGET", "lots")
    code, _ = run(["check", "--table", "phase", "--gap"])
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hyperforge", "check", "--table", "signs"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["passed"]
