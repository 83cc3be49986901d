from fractions import Fraction
from pathlib import Path

import pytest

import shl

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


def test_torus_report():
    report = shl.load(CORPUS / "torus4.mfd").report()
    assert report["b"] == [1, 4, 6, 4, 1]
    assert report["h_bc"] == report["b"]
    assert report["delta_s"] == [0, 0, 0, 0, 0]
    assert report["dim_ker_PJ"] == 5
    assert report["hlc_holds"]


def test_kodaira_thurston():
    kt = shl.load(CORPUS / "kt.mfd")
    assert kt.dim == 4
    assert kt.betti(1) == 3
    assert kt.betti(2) == 4
    assert kt.delta_s(1) == 0
    report = kt.report(Fraction(1, 3))
    assert report["lambda"] == "1/3"
    assert report["h_plus_J"] + report["h_minus_J"] == 4
    verdicts = {v["claim_id"]: v for v in kt.check()}
    assert all(v["consistent"] for v in verdicts.values())
    assert verdicts["T2"]["witnesses"]["condition3"] == "true"


def test_machine_report_matches_golden():
    text = shl.load(CORPUS / "kt.mfd").machine_report()
    assert text == (CORPUS / "golden" / "kt.txt").read_text()
    assert "b.1 =" not in shl.load(CORPUS / "kt.mfd").machine_report(degree=2)


def test_errors():
    with pytest.raises(shl.ParseError, match="line 1"):
        shl.Structure.from_text("dim = 3\nomega = e12\n")
    with pytest.raises(shl.StructureError):
        shl.Structure.from_text("dim = 4\nstructure = (0,0,0,12)\nomega = e12 + e34\n")
    kt = shl.load(CORPUS / "kt.mfd")
    with pytest.raises(ValueError):
        kt.report(0)
    with pytest.raises(ValueError):
        kt.check("nope")


def test_random_structures_round_trip():
    for seed in range(4):
        text = shl.random_structure(4, seed)
        assert shl.canonical_text(text) == text
        assert shl.Structure.from_text(text).check("t2")[0]["consistent"]
