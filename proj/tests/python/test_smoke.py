import json
import pathlib

import pytest

import hopfinv

FIXTURES = pathlib.Path(__file__).resolve().parents[2] / "fixtures"


def test_fixture_names():
    fx = hopfinv.fixtures()
    assert {"fix_g2", "fix_sw", "fix_trivial"} <= set(fx)
    assert repr(fx["fix_sw"]) == "<Instance over Q, dim A = 2, dim H = 4>"


def test_load_round_trip():
    path = FIXTURES / "fix_g2.json"
    inst = hopfinv.load(str(path))
    assert inst.canonical() == path.read_text()
    again = hopfinv.from_json(inst.to_json())
    assert again.digest() == inst.digest()
    assert hopfinv.from_json(json.dumps(inst.to_json())).digest() == inst.digest()


def test_graded_quadratic():
    g2 = hopfinv.fixtures()["fix_g2"]
    assert g2.invariants() == ["1"]
    coeffs, flags = g2.charpoly("x")
    assert coeffs == ["-1", "0", "1"]
    assert all(flags)
    assert g2.fiber_sizes() == [2]
    assert g2.is_galois()
    assert g2.has_total_integral()
    assert g2.reductivity_certificate() == "a"


def test_sweedler():
    sw = hopfinv.fixtures()["fix_sw"]
    assert sw.is_h_simple()
    assert not sw.is_galois()
    assert sw.fiber_sizes() == [1]
    assert sw.charpoly("u")[0] == ["0", "0", "0", "0", "1"]


def test_report_sections():
    sw = hopfinv.fixtures()["fix_sw"]
    rep = sw.report(["galois", "simple"])
    assert rep["galois"]["agree"] is True
    assert rep["simple"]["h_simple"] is True
    assert "integral" in hopfinv.report_sections()
    with pytest.raises(ValueError):
        sw.report(["nonsense"])


def test_rejects_bad_instances():
    with pytest.raises(ValueError, match="not prime"):
        hopfinv.load(str(FIXTURES / "negative" / "bad_prime.json"))
    with pytest.raises(ValueError, match="not multiplicative"):
        hopfinv.load(str(FIXTURES / "negative" / "not_multiplicative.json"))


def test_fuzz_deterministic():
    a = hopfinv.fuzz(seed=3, count=8, field="F_3")
    b = hopfinv.fuzz(seed=3, count=8, field="F_3")
    assert a == b
    assert len(a["instances"]) == 8
    assert a["alarm_count"] == 0
