import json

import pytest

from codent import catalog
from codent.cli import emit, main
from codent.enumerators import SWEPoly
from codent.errors import NotFound
from codent.linalg import CMatrix


@pytest.fixture
def code_files(tmp_path):
    paths = {}
    for name in ("E8", "Q8", "K8"):
        p = tmp_path / f"{name.lower()}.json"
        p.write_text(json.dumps(catalog.code(name).to_json()))
        paths[name] = str(p)
    return paths


def test_emit_matrix_text_is_printed_layout():
    text = emit("matrix", "phi_chi", "text")
    assert CMatrix.from_text(text) == catalog.printed_matrix("phi_chi")
    assert text == emit("matrix", "phi_chi", "text")


def test_emit_poly_text():
    text = emit("poly", "W_E8_K8", "text")
    assert SWEPoly.parse(text) == catalog.printed_poly("W_E8_K8")


def test_emit_code_json():
    assert json.loads(emit("code", "q8", "json")) == catalog.code("Q8").to_json()


def test_emit_formula_series():
    coeffs = json.loads(emit("series", "molien_formula", "json"))
    assert coeffs[8] == 2 and coeffs[48] == 195


@pytest.mark.parametrize("what, ident", [("matrix", "psi"), ("poly", "W_X"), ("series", "x"), ("code", "E7")])
def test_emit_unknown(what, ident):
    with pytest.raises(NotFound):
        emit(what, ident)


def test_emit_unknown_exit_code(capsys):
    assert main(["emit", "poly", "nope"]) == 2


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["group", "--limit", "x"])
    assert exc.value.code == 2


def test_bad_json_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["code", "--file", str(bad)]) == 2
    assert main(["code", "--file", str(tmp_path / "missing.json")]) == 2


def test_code_check(code_files, capsys):
    assert main(["code", "--file", code_files["K8"], "--check", "type2", "--check", "self-dual"]) == 0
    out = capsys.readouterr().out
    assert "size 256" in out and "type2: PASS" in out


def test_code_check_fails_on_non_type2(tmp_path, capsys):
    p = tmp_path / "rep.json"
    p.write_text(json.dumps({"modulus": 2, "n": 2, "rows": [[1, 1]]}))
    assert main(["code", "--file", str(p), "--check", "type2"]) == 1


def test_swe_and_invariance_and_independence(code_files, tmp_path, capsys):
    q = tmp_path / "wq.json"
    k = tmp_path / "wk.txt"
    assert main(["swe", "--codes", code_files["E8"], code_files["Q8"], "--format", "json", "--out", str(q)]) == 0
    assert main(["swe", "--codes", code_files["E8"], code_files["K8"], "--out", str(k)]) == 0
    assert SWEPoly.from_json(json.loads(q.read_text())) == catalog.printed_poly("W_E8_Q8")
    assert main(["invariance", str(q), str(k)]) == 0
    assert main(["independence", "--polys", str(q), str(k), "--monomials", "a^8", "b^8"]) == 0
    assert "det 96" in capsys.readouterr().out
    assert main(["independence", "--polys", str(q), str(q), "--monomials", "a^8", "b^8"]) == 1


def test_invariance_failure(tmp_path, capsys):
    p = tmp_path / "a8.txt"
    p.write_text("a^8")
    assert main(["invariance", str(p)]) == 1


def test_group_from_generator_file(tmp_path, capsys):
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps({"generators": [{"kind": "zeta"}, {"kind": "eta", "S": [["1", "1"], ["1", "1/2"]]}],
                                "symmetrize": True}))
    spec = tmp_path / "ring.json"
    spec.write_text(json.dumps({"ks": [1, 2]}))
    out = tmp_path / "elements.json"
    assert main(["group", "--generators", str(gens), "--spec", str(spec), "--emit-elements", str(out),
                 "--expect", "64"]) == 0
    # z*I and a diagonal of order 8 whose first entry is 1 meet trivially: 8 * 8
    assert len(json.loads(out.read_text())) == 64
    assert main(["group", "--generators", str(gens), "--spec", str(spec), "--expect", "8"]) == 1


def test_molien_with_formula(tmp_path, capsys):
    gens = tmp_path / "gens.json"
    gens.write_text(json.dumps([{"kind": "matrix", "matrix": (-CMatrix.identity(2)).to_json()}]))
    good = tmp_path / "f.json"
    good.write_text(json.dumps({"numerator": [1, 0, 1], "denominator_factors": [[2, 2]]}))
    assert main(["molien", "--generators", str(gens), "--order", "6", "--formula", str(good),
                 "--deep-degree", "4"]) == 0
    assert json.loads(capsys.readouterr().out.splitlines()[0]) == [1, 0, 3, 0, 5, 0, 7]
    wrong = tmp_path / "g.json"
    wrong.write_text(json.dumps({"numerator": [1], "denominator_factors": [[2, 2]]}))
    assert main(["molien", "--generators", str(gens), "--order", "6", "--formula", str(wrong)]) == 1
