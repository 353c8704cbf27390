import pathlib

import pytest

import efgc

SPECS = pathlib.Path(__file__).resolve().parents[2] / "specs"


def test_commands_listed():
    assert "selftest" in efgc.commands()


def test_ktheory_transfer():
    doc, code = efgc.run("transfer", SPECS / "ktheory_z2.toml")
    assert code == 0
    assert doc["schema"] == "efgc/1"
    eta = {row["class"]: row["value"] for row in doc["results"]["eta"]}
    assert eta == {"[A/1]": "1+v", "[A/A]": "1"}


def test_divisor_expression():
    doc, code = efgc.run("divisor", SPECS / "ktheory_z2.toml", expr="point(0)+point(0)")
    assert code == 0
    assert doc["results"]["gen_text"] == "x^2"
    assert doc["results"]["euler"] == "0"


def test_exit_codes():
    _, code = efgc.run("validate", SPECS / "invalid" / "tampered_sigma.toml")
    assert code == 1
    _, code = efgc.run("validate", SPECS / "invalid" / "malformed.toml")
    assert code == 2


def test_residue_and_rings():
    assert efgc.residue("x^3", "x^2 - 2") == "2"
    assert efgc.describe_ring("Z[v]/(v^2-1)") == "Z[v]/(-1+v^2)"
    with pytest.raises(efgc.EfgcError):
        efgc.residue("1", "2*x")


def test_selftest_suite_and_render():
    doc, code = efgc.run("selftest", suite="residue")
    assert code == 0
    assert all(p["pass"] for p in doc["results"]["properties"])
    assert efgc.render(doc, "csv").startswith("suite,name,cases")


def test_determinism():
    a, _ = efgc.run("vn", SPECS / "product_f7.toml", max_n=3, negative=True)
    b, _ = efgc.run("vn", SPECS / "product_f7.toml", max_n=3, negative=True)
    assert efgc.render(a) == efgc.render(b)
