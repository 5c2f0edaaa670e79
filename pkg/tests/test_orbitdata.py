import json

import pytest

from noc.exactalg import parse_poly
from noc.orbitdata import (
    ORBITS, LinForm, canonical_name, dataset_json, derived_normal_weights, euler_class,
    is_fixed_by_torus, load_dataset, orbit, orbit_names, parse_quadric, quadric_str,
    weight_comparison,
)
from noc.invariants import Net, corank


def test_table_shape():
    assert len(ORBITS) == 24
    assert orbit_names()[:5] == ["C", "D", "D*", "E", "E*"]
    assert orbit("0").codim == 18


def test_euler_classes():
    assert euler_class(orbit("C")) == parse_poly("8*(alpha - beta)^2", orbit("C").torus_table)
    assert euler_class(orbit("D")) == parse_poly("-9*(alpha - beta)^2", orbit("D").torus_table)


def test_euler_class_uses_derived_weights():
    # the tabulated (1^4) weight names a parameter that torus does not have
    o = orbit("(1^4)")
    assert o.params == ("alpha", "beta")
    assert euler_class(o) == parse_poly("(beta - 2*alpha)^4", o.torus_table)


@pytest.mark.parametrize("o", ORBITS, ids=lambda o: o.name)
def test_euler_degree_is_codim(o):
    assert euler_class(o).weighted_degree() == o.codim


@pytest.mark.parametrize("o", ORBITS, ids=lambda o: o.name)
def test_representative_corank_matches_stratum(o):
    assert corank(Net(o.representative)) == o.expected_corank


@pytest.mark.parametrize("o", ORBITS, ids=lambda o: o.name)
def test_torus_fixes_representative(o):
    assert is_fixed_by_torus(o)


TABULATED_ROWS_WITH_GAPS = {"I", "I*", "(4)", "(1^4)"}


@pytest.mark.parametrize("o", [o for o in ORBITS if o.name != "0"], ids=lambda o: o.name)
def test_normal_weights_against_tabulated(o):
    derived = derived_normal_weights(o)
    assert len(derived) == o.codim
    cmp = weight_comparison(o)
    if o.name not in TABULATED_ROWS_WITH_GAPS:
        assert cmp["match"], cmp
        return
    assert not cmp["match"]
    if o.name == "(1^4)":
        assert cmp["missing_from_print"] == ["-2alpha + beta"] * 4
    else:
        # one weight short of the codimension, nothing spurious
        assert len(o.printed_normal_weights) == o.codim - 1
        assert len(cmp["missing_from_print"]) == 1 and cmp["extra_in_print"] == []


def test_quadric_parsing():
    assert parse_quadric("2xz + y^2") == parse_quadric("y^2 + 2*x*z")
    assert quadric_str(parse_quadric("x^2 - 3/2yz")) == "x^2 - 3/2yz"
    with pytest.raises(ValueError):
        parse_quadric("x^3")


def test_linear_forms():
    f = LinForm.parse("-2alpha + 2beta")
    assert f.evaluate({"alpha": 1, "beta": 3}) == 4
    assert LinForm.parse(str(f)) == f
    assert f.scale(-1) == LinForm.parse("2alpha - 2beta")


def test_names():
    assert canonical_name("1^4") == "(1^4)"
    with pytest.raises(KeyError):
        orbit("nope")


def test_dataset_roundtrip(tmp_path):
    (tmp_path / "orbits.json").write_text(json.dumps(dataset_json()))
    loaded = load_dataset(tmp_path)
    assert [o.to_json() for o in loaded] == [o.to_json() for o in ORBITS]
