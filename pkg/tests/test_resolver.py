from dataclasses import replace

import pytest

from noc.exactalg import Poly, RatFun, VarTable, parse_poly
from noc.orbitdata import ORBITS, orbit
from noc.reference import AMU_CLASSES, ORBIT_CLASSES, chern_poly, printed_class
from noc.resolver import (
    class_Amu, factored_str, poincare_identity_check, slice_data, solve_class,
)
from noc.resolver import check_restrictions, class_Amu_coefficients, poincare_term, slice_images

SOLVABLE = [o for o in ORBITS if o.codim > 1 and o.name != "0"]


@pytest.fixture(scope="module")
def classes():
    return {o.name: solve_class(o) for o in SOLVABLE}


@pytest.mark.parametrize("name", sorted(ORBIT_CLASSES))
def test_tabulated_classes(classes, name):
    assert classes[name].poly == printed_class(name)


def test_every_class_is_unique_integral_and_verified(classes):
    for name, res in classes.items():
        assert res.verified, name
        assert res.poly.weighted_degree() == orbit(name).codim
        assert all(c.denominator == 1 for c in res.poly.terms.values()), name


def test_restrictions_hold_post_hoc(classes):
    # including orbits that were not needed to pin the class down
    for name, res in classes.items():
        assert check_restrictions(res.poly, orbit(name)) == [], name


def test_wrong_class_is_caught():
    bad = printed_class("D") + chern_poly("u1^2")
    assert "D" in check_restrictions(bad, orbit("D"))


def test_codim_one_family():
    assert class_Amu("finite") == chern_poly(AMU_CLASSES["finite"])
    assert class_Amu("infinity") == chern_poly(AMU_CLASSES["infinity"])
    assert class_Amu("finite") == class_Amu("infinity").scale(2)
    assert class_Amu_coefficients("finite") == (-8, 4)


def test_slice_restriction_of_the_finite_class():
    sd = slice_data()
    t = VarTable(("alpha", "beta"))
    assert class_Amu("finite").substitute(slice_images(), t) == parse_poly("4*alpha - 4*beta", t)
    assert str(sd.c_weight) == "4α - 4β" and str(sd.g_weight) == "2α - 2β"


def test_factored_printing():
    assert factored_str(printed_class("C")) == "8*(v1 - 2*u1)^2"
    assert factored_str(printed_class("F")).startswith("2*(v1 - 2*u1)*")


def test_orbit_zero_is_refused():
    with pytest.raises(ValueError, match="zero orbit"):
        solve_class("0")


# ---------------------------------------------------------------------------
# Poincare series

T = VarTable(("t",))
t = Poly.var(T, "t")
one = Poly.const(T, 1)


def test_single_term():
    assert poincare_term(orbit("C")) == RatFun(t * t, (one - t) * (one - t))


def test_identity_residue_is_localised_to_one_row():
    rep = poincare_identity_check()
    assert not rep.passed
    assert rep.rank_mismatches == ("(22)",)


def test_identity_closes_once_the_row_has_four_generators():
    # the residue -t^7 / ... is exactly the (22) term with one generator degree missing
    rep = poincare_identity_check()
    name, degrees = rep.repairs[0]
    fixed = [replace(o, poincare_degrees=degrees) if o.name == name else o for o in ORBITS]
    assert poincare_identity_check(fixed).passed


def test_dropping_a_term_breaks_the_identity():
    rep = poincare_identity_check()
    name, degrees = rep.repairs[0]
    fixed = [replace(o, poincare_degrees=degrees) if o.name == name else o for o in ORBITS]
    broken = poincare_identity_check([o for o in fixed if o.name != "H"])
    assert not broken.passed and not broken.residue.is_zero()
