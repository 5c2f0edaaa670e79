from fractions import Fraction

import pytest

from noc.properties import localization_linearity, localization_symmetry
from noc.reference import THOM_P3, THOM_P4_FINITE, printed_schur
from noc.resolver import class_Amu
from noc.thom import EQUIDIMENSIONAL_ORBITS, localize, tp_equidimensional, tp_orbit


@pytest.mark.parametrize("name", sorted(THOM_P3))
def test_tabulated_at_p3(name):
    assert tp_equidimensional(name, 3) == printed_schur(THOM_P3[name])


def test_term_counts():
    assert len(tp_equidimensional("D", 3)) == 5
    assert len(tp_equidimensional("E", 3)) == 10


def test_degree_bookkeeping():
    r = tp_orbit("A_finite", 3)
    # 6p + codim - 9
    assert r.degree == 10 == r.schur.size
    assert tp_orbit("E", 3, expand=False).degree == 12


def test_infinity_is_half_of_finite_at_p3():
    fin = tp_orbit("A_finite", 3, expand=False).elementary
    inf = tp_orbit("A_infinity", 3, expand=False).elementary
    assert inf == fin.scale(Fraction(1, 2))


@pytest.mark.slow
def test_tabulated_at_p4():
    r = tp_orbit("A_finite", 4)
    assert len(r.schur) == 14
    assert r.schur == printed_schur(THOM_P4_FINITE)


def test_localization_of_zero_and_bad_p():
    zero = localize(class_Amu("finite").scale(0), 3)
    assert zero.elementary.is_zero() and len(zero.schur) == 0
    with pytest.raises(ValueError):
        localize(class_Amu("finite"), 2)


@pytest.mark.parametrize("name", ["A_finite", "D"])
def test_root_form_is_symmetric(name):
    ok, detail = localization_symmetry(name, 3)
    assert ok, detail


@pytest.mark.parametrize("seed", [17, 23, 101])
def test_localization_is_linear(seed):
    ok, detail = localization_linearity(seed=seed)
    assert ok, detail


def test_known_names():
    assert set(EQUIDIMENSIONAL_ORBITS) == {"A_finite", "A_infinity", "D", "E"}
    with pytest.raises(KeyError):
        tp_orbit("nope", 3)
