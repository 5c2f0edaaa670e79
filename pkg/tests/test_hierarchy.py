from fractions import Fraction

import pytest

from noc.exactalg import parse_poly
from noc.hierarchy import (
    FAMILY_NODES, NotPositive, PositivityWitness, find_positive_functional, incident, positivity,
    restricted_class, verify_printed_witness,
)
from noc.orbitdata import ORBITS, orbit
from noc.reference import INCIDENCE_EXAMPLE, UNSTABLE_NOT_POSITIVE


def test_fourier_motzkin_feasible():
    rows = [(1, 0, 0), (-1, 1, 0), (0, -1, 1), (1, 1, -1)]
    x = find_positive_functional(rows)
    assert all(sum(Fraction(a) * b for a, b in zip(r, x)) > 0 for r in rows)
    assert all(v.denominator == 1 for v in x)


def test_fourier_motzkin_infeasible():
    assert find_positive_functional([(1, 0), (-1, 0)]) is None
    # a positive combination of the rows vanishes
    assert find_positive_functional([(1, -1), (0, 1), (-1, 0)]) is None
    assert find_positive_functional([(0, 0)]) is None


def test_tabulated_witness_for_C():
    w = positivity("C")
    assert isinstance(w, PositivityWitness) and w.source == "tabulated"
    assert w.values == (1, 0)
    assert sorted(w.weight_values) == [2, 4]


@pytest.mark.parametrize("name", UNSTABLE_NOT_POSITIVE)
def test_semistable_orbits_are_not_positive(name):
    p = positivity(name)
    assert isinstance(p, NotPositive) and not p


@pytest.mark.parametrize("o", [o for o in ORBITS if o.name not in UNSTABLE_NOT_POSITIVE and o.codim > 1],
                         ids=lambda o: o.name)
def test_every_unstable_orbit_is_positive(o):
    w = positivity(o, use_printed=False)
    assert w, w
    assert all(v > 0 for v in w.weight_values)


def test_tabulated_witnesses_that_fail():
    # K's functional kills one derived weight; (1^4)'s makes one negative
    bad = {}
    for o in ORBITS:
        chk = verify_printed_witness(o)
        if chk is not None and not chk.ok:
            bad[o.name] = chk
    assert sorted(bad) == ["(1^4)", "K"]
    assert min(bad["K"].values) == 0
    assert set(bad["(1^4)"].values) == {-2}
    # search still finds functionals for both
    assert positivity("K").source == positivity("(1^4)").source == "search"


def test_example_restrictions():
    t = orbit("(1^4)").torus_table
    for eta, text in INCIDENCE_EXAMPLE.items():
        assert restricted_class(eta, "(1^4)") == parse_poly(text, t), eta
    assert restricted_class("A_mu", "(1^4)") == parse_poly("4*(beta - 2*alpha)", t)
    assert not incident("F", "(1^4)")
    assert incident("F*", "(1^4)")
    assert incident("A_mu", "(1^4)")


def test_incidence_needs_a_positive_point():
    with pytest.raises(ValueError):
        incident("C", "D")


# ---------------------------------------------------------------------------
# the graph


def test_graph_sanity(graph):
    assert graph.transitivity_violations() == []
    assert graph.codim_violations() == []
    assert set(FAMILY_NODES) <= set(graph.nodes)


def test_graph_example_edges(graph):
    assert ("F*", "(1^4)") in graph.edges
    assert ("F", "(1^4)") not in graph.edges


def test_cone_point_is_in_every_closure(graph):
    assert all((n, "0") in graph.edges for n in graph.nodes if n != "0")


def test_semistable_edges_follow_k(graph):
    assert graph.k_values["D"] == graph.k_values["E"] == 1
    assert graph.k_values["D*"] == graph.k_values["E*"] == 4
    for a, b in [("B", "D"), ("B", "E"), ("B*", "D*"), ("B*", "E*")]:
        assert (a, b) in graph.edges
    assert ("B", "D*") not in graph.edges
    flagged = {(a, b) for a, b, _ in graph.flagged}
    assert flagged == {("D", "E"), ("D*", "E*")}


def test_graph_outputs(graph):
    data = graph.to_json()
    assert len(data["edges"]) == len(graph.edges)
    dot = graph.to_dot()
    assert dot.startswith("digraph") and '"F*" -> "(1^4)"' in dot


def test_covering_edges_generate_the_graph(graph):
    cover = set(graph.covering_edges())
    assert cover <= set(graph.edges)
    assert ("C", "0") not in cover
    closure = set(cover)
    while True:
        extra = {(a, d) for a, b in closure for c, d in closure if b == c} - closure
        if not extra:
            break
        closure |= extra
    assert closure == set(graph.edges)
