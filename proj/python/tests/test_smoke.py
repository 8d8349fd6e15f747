"""Smoke tests for the Python module: the catalogue loads, verification and
signatures agree with the recorded values, and one full reduce/rebuild round
trip is exact."""

import pytest

import sklie


def test_fixture_catalogue():
    names = sklie.fixture_list()
    assert "g1_dim4" in names
    assert "model" in names or "model(1)" in names or any("model" in n for n in names)


def test_verify_certified():
    a = sklie.fixture("g1_dim4")
    assert a.dim == 4
    report = a.verify()
    assert report["certified"]
    assert len(report["items"]) == 14
    assert all(item["passed"] for item in report["items"])
    assert a.signature() in ((2, 2),)


def test_verify_negative_names_the_axiom():
    report = sklie.fixture("neg_affR_1").verify()
    assert not report["certified"]
    failing = [item["axiom"] for item in report["items"] if not item["passed"]]
    assert failing == ["one_cocycle"]


def test_serialize_parse_round_trip():
    a = sklie.fixture("model(2)")
    text = a.serialize()
    again = sklie.parse(text)
    assert sklie.same_structure(a, again)
    assert again.serialize() == text


def test_reduce_then_extend_is_identity():
    ga = sklie.fixture("ga_dim6(1)")
    line = ["1", "0", "0", "0", "0", "0"]
    reduced, derivation, adapted = sklie.reduce_by_line(ga, line)
    assert reduced.certified()
    rebuilt = sklie.double_extension(reduced, derivation)
    assert sklie.same_structure(rebuilt, sklie.change_basis(ga, adapted))


def test_derivation_solver_matches_recorded_family():
    basis = sklie.derivation_space(sklie.fixture("g3_dim4"))
    assert len(basis) == 1
    assert basis[0] == [
        ["0", "1", "0", "1"],
        ["-1", "0", "-1", "0"],
        ["0", "-1", "0", "-1"],
        ["1", "0", "1", "0"],
    ]
    assert len(sklie.sp_commutant_space(sklie.fixture("g3_dim4"))) == 4


def test_cotangent_from_metric_fixture():
    cot = sklie.cotangent("h3_lorentz")
    assert cot.dim == 6
    assert cot.certified()
    assert cot.is_flat_special()


def test_errors_carry_the_code():
    with pytest.raises(sklie.Error, match="UnknownFixture"):
        sklie.fixture("nope")
    with pytest.raises(sklie.Error, match="ParseError"):
        sklie.parse("{")
