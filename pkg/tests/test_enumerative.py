from fractions import Fraction

import pytest

from noc.enumerative import (
    CUBIC_CLASSES, degree, delta_images, delta_pullback, git_map_check,
    pullback_identities, solve_multiplicities,
)
from noc.enumerative import printed_chart, root_multiplicity
from noc.exactalg import Poly, RatFun
from noc.reference import DEGREES, K_B, chern_poly, printed_class
from noc.resolver import class_Amu, solve_class


def test_degree_evaluates_at_the_split_point():
    # evaluated at u = 0, v = (3, 3, 1)
    assert degree(chern_poly("v1^2")) == 9
    assert degree(chern_poly("v2")) == 3
    assert degree(chern_poly("v3")) == 1
    assert degree(chern_poly("u1*v1")) == 0


@pytest.mark.parametrize("name", ["C", "D", "D*"])
def test_orbit_degrees(name):
    assert degree(printed_class(name)) == DEGREES[name]


def test_hypersurface_degrees():
    assert degree(class_Amu("finite")) == DEGREES["A_mu"]
    assert degree(class_Amu("infinity")) == DEGREES["A_inf"]


def test_pullback_images_are_exact():
    imgs = delta_images()
    assert set(imgs) == {"e1", "e2", "e3"}
    assert all(imgs[f"e{i}"].weighted_degree() == i for i in (1, 2, 3))
    # C(3, 1) * (-2/3 u1) + v1
    assert imgs["e1"] == chern_poly("v1 - 2*u1")


def test_single_pullback():
    assert delta_pullback("nu") == printed_class("C").scale(3)
    assert delta_pullback(CUBIC_CLASSES["nu"]) == delta_pullback("nu")


def test_identities_solve_uniquely_as_tabulated():
    rows = pullback_identities()
    assert [r.target for r, _ in rows] == ["nu", "theta", "Omega", "A", "K"]
    for r, printed in rows:
        assert r.unique and r.verified, r.target
        assert r.values() == printed, r.target


def test_K_residual_term():
    r = dict((r.target, r) for r, _ in pullback_identities())["K"]
    coeffs = dict(r.coefficients)
    # the residual -4*u1*[F] + 2*v1*[F] is 2*(v1 - 2*u1)*[F]
    residual = chern_poly("u1").scale(coeffs["u1*[F]"]) + chern_poly("v1").scale(coeffs["v1*[F]"])
    assert residual == chern_poly("2*(v1 - 2*u1)")
    assert coeffs["G"] == 4 and coeffs["G*"] == Fraction(1, 2) and coeffs["(1^4)"] == 12


def test_solved_G_satisfies_the_K_relation():
    lhs = delta_pullback("K")
    F = printed_class("F")
    rhs = (solve_class("(1^4)").poly.scale(12) + solve_class("G").poly.scale(4)
           + solve_class("G*").poly.scale(Fraction(1, 2)) + F * chern_poly("2*(v1 - 2*u1)"))
    assert lhs == rhs


def test_outside_the_span_and_non_unique():
    nu = CUBIC_CLASSES["nu"]
    r = solve_multiplicities(nu, [("D", printed_class("D"))])
    assert r.status == "not in span" and not r.verified
    C = printed_class("C")
    r = solve_multiplicities(nu, [("C", C), ("2C", C.scale(2))])
    assert r.status == "family" and r.kernel_dimension == 1 and not r.unique


# ---------------------------------------------------------------------------
# GIT quotient map


def test_git_map_matches_chart_up_to_sign():
    rep = git_map_check()
    assert rep.ok
    assert rep.sign == -1
    chart = printed_chart()
    assert rep.j_of_k == RatFun(chart.num.scale(-1), chart.den)
    assert rep.identity_on_slice


def test_git_fibres():
    # j = 4 / ((4 - k)(1 - k)^2); j = 1 gives k (k - 3)^2 = 0
    rep = git_map_check()
    assert rep.fibers == {"infinity": {"1": 2, "4": 1}, "0": {"infinity": 3}, "1": {"0": 1, "3": 2}}
    assert rep.b_multiplicity == 2
    assert (rep.k_B, rep.k_Bstar) == (K_B["B"][1], K_B["B*"][1])


def test_root_multiplicity():
    k = Poly.var(printed_chart().den.table, "k")
    p = (k - 1) * (k - 1) * (k - 4)
    assert root_multiplicity(p, Fraction(1)) == 2
    assert root_multiplicity(p, Fraction(4)) == 1
    assert root_multiplicity(p, Fraction(2)) == 0
