import pytest

import pybiq


def test_catalog_and_automorphisms():
    assert "q8" in pybiq.catalog_groups()
    assert len(pybiq.automorphisms("q8")) == 24
    assert pybiq.automorphisms("zn:5")[0] == [0, 1, 2, 3, 4]
    assert pybiq.center("q8") == [0, 4]


def test_parse_and_builtin():
    assert pybiq.parse("(x o z) * (y o z) = x * y") == "((x o z) * (y o z)) = (x * y)"
    assert pybiq.builtin("e2") == "((x o z) * (y o z)) = (x * y)"
    with pytest.raises(pybiq.ParseError) as info:
        pybiq.parse("x o y o z = x")
    assert info.value.position == 6
    assert isinstance(info.value, ValueError)


def test_check_counterexample():
    z3 = pybiq.group_table("zn:3")
    result = pybiq.check(z3, z3, "e1")
    assert result["holds"] is False
    ce = result["counterexample"]
    assert (ce["x"], ce["y"], ce["z"]) == (0, 0, 1)
    assert (ce["lhs"], ce["rhs"]) == (2, 0)


def test_constructions_satisfy_their_identity():
    circ, star = pybiq.construct("c72", a=3)
    assert pybiq.check(circ, star, "e7")["holds"]
    circ, star = pybiq.construct("t26", group="d4", a=2)
    assert pybiq.check(circ, star, "e6")["holds"]
    with pytest.raises(pybiq.Error):
        pybiq.construct("c71", n=5, a=2)


def test_ward_round_trip():
    for name in pybiq.catalog_groups():
        ward = pybiq.ward_from_group(name)
        assert pybiq.is_ward(ward)
        assert pybiq.derived_group(ward) == pybiq.group_table(name)


def test_properties():
    circ, star = pybiq.construct("inverse_op", group="zn:4")
    props = pybiq.properties(circ, star)
    assert props["ward_circ"] and props["commutative_star"]
    assert props["unipotent_circ"] == 0
    assert props["left_neutral_circ"] is None


def test_census_and_theorems():
    census = pybiq.census("zn:5", "e4", workers=2)
    assert len(census["satisfying"]) == 20
    assert census["total_specs"] == 6400
    check = pybiq.verify_theorem("t24a", "zn:5")
    assert check["agree"] and check["census"] == 20
    assert pybiq.verify_theorem("t22", "s3")["census"] == 0


def test_structural():
    report = pybiq.verify_structural("t26ward", 3)
    assert report["violations"] == 0
    assert report["pairs"] == 144
