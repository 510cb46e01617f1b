import json
from fractions import Fraction

import pytest

import divcalc


def test_catalog_and_models():
    names = divcalc.catalog_names()
    assert "F1.json" in names and "P3-toric.json" in names
    f1 = divcalc.load_model("F1")
    assert f1.kind == "surface" and f1.class_length == 2
    assert len(f1.hash) == 16
    again = divcalc.parse_model(f1.canonical_text())
    assert again.hash == f1.hash
    assert divcalc.load_model("P3-toric").dimension == 3


def test_zariski_and_volume_on_f1():
    z = divcalc.zariski("F1", [1, 1])
    assert z["positive"] == [1, 0]
    assert [(g, c) for _, g, c in z["negative"]] == [([0, 1], 1)]
    assert divcalc.volume("F1", [2, 1]) == 4
    assert divcalc.volume("F1", ["1/2", Fraction(1, 4)]) == Fraction(1, 4)


def test_p1xp1_pair():
    f0 = divcalc.load_model("F0")
    assert divcalc.s_sequence(f0, [1, 2], [2, 1]) == [4, 5, 4]
    assert divcalc.slope(f0, [1, 2], [2, 1]) == Fraction(1, 2)
    r = divcalc.report("minkowski-report", f0, d1=[1, 2], d2=[2, 1])
    assert r["certified"] is True
    assert r["metadata"]["model_hash"] == f0.hash


def test_report_text_is_deterministic_json():
    a = divcalc.report_text("minkowski-report", "dP6", count=3, seed=5)
    b = divcalc.report_text("minkowski-report", "dP6", count=3, seed=5)
    assert a == b
    assert json.loads(a)["certified"] is True


def test_okounkov_and_hulls():
    s = divcalc.okounkov_sample("P2-toric", [0, 0, 1], 2)
    assert len(s["points"]) == 6
    assert s["hull_volume"] == Fraction(1, 2)
    assert divcalc.hull_volume([[0, 0], [2, 0], [0, 2], [2, 2]]) == 4
    assert divcalc.s_sequence("P3-toric", [1, 0, 0, 0], [2, 0, 0, 0]) == [8, 4, 2, 1]


def test_errors_carry_codes():
    with pytest.raises(divcalc.DivcalcError) as e:
        divcalc.volume("F1", [0.5, 1])
    assert e.value.code == "rational-encoding"
    with pytest.raises(divcalc.DivcalcError) as e:
        divcalc.s_sequence("F1", [2, 1], [0, 1])
    assert e.value.code == "not-big"
    with pytest.raises(divcalc.DivcalcError) as e:
        divcalc.volume("F1", [1, 2, 3])
    assert e.value.code == "dimension-mismatch"
    with pytest.raises(divcalc.DivcalcError) as e:
        divcalc.load_model("NoSuchModel")
    assert e.value.code == "unknown-model"
