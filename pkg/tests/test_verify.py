import json

import pytest

from codent import catalog
from codent.cli import main
from codent.verify import CLAIMS, VerifyConfig, verify_paper


@pytest.fixture(scope="module")
def report():
    return verify_paper(VerifyConfig(skip_G=True))


def test_every_claim_once(report):
    ids = [c.claim_id for c in report.claims]
    assert sorted(ids) == sorted(CLAIMS)
    assert {c.criterion for c in report.claims} == set(range(1, 10))


def test_skip_G(report):
    verdicts = {c.claim_id: c.verdict for c in report.claims}
    assert verdicts.pop("group-order-G") == "skipped"
    assert set(verdicts.values()) == {"pass"}
    assert report.passed


def test_H_order_reported(report):
    h = next(c for c in report.claims if c.claim_id == "group-order-H")
    assert h.computed == 294912


def test_deterministic_modulo_timing(report):
    again = verify_paper(VerifyConfig(skip_G=True))
    a = json.dumps(report.to_json(timing=False), sort_keys=True, default=str)
    b = json.dumps(again.to_json(timing=False), sort_keys=True, default=str)
    assert a == b


def test_corrupted_q8_fails(tmp_path, capsys):
    g = catalog.code("Q8").to_json()
    g["rows"][0][0] = (g["rows"][0][0] + 1) % 4
    bad = tmp_path / "q8_bad.json"
    bad.write_text(json.dumps(g))
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"code_overrides": {"Q8": str(bad)}}))
    report = tmp_path / "report.json"
    code = main(["verify-paper", "--skip-G", "--config", str(cfg), "--report", str(report), "--no-timing"])
    assert code == 1
    data = json.loads(report.read_text())
    failing = {c["claim_id"] for c in data["claims"] if c["verdict"] == "fail"}
    assert {"code-certification", "degree8-enumerators"} <= failing
    assert data["overall"] == "fail"
    assert "failing claims:" in capsys.readouterr().out
