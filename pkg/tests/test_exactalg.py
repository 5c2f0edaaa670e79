from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from noc.exactalg import (
    Poly, RatFun, VarTable, format_rational, parse_poly, parse_rational, solve_linear,
    solve_unique, weighted_monomials,
)

R = VarTable(("x", "y", "z"))
x, y, z = R.vars()

coef = st.fractions(min_value=-20, max_value=20, max_denominator=6)
monomial = st.tuples(*(st.integers(0, 3) for _ in range(3)))
polys = st.dictionaries(monomial, coef, max_size=5).map(lambda d: Poly(R, d))

SETTINGS = settings(max_examples=60, derandomize=True, deadline=None)


@SETTINGS
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(R)


@SETTINGS
@given(polys, polys)
def test_exact_division_undoes_multiplication(a, b):
    if not b.is_zero():
        assert (a * b).divide_exact(b) == a


@SETTINGS
@given(polys)
def test_parse_roundtrip(a):
    assert parse_poly(str(a), R) == a


@SETTINGS
@given(polys)
def test_json_roundtrip(a):
    assert Poly.from_json(a.to_json(), R) == a


def test_zero_coefficients_are_dropped():
    p = Poly(R, {(1, 0, 0): 0, (0, 1, 0): Fraction(2, 4)})
    assert p.sorted_terms() == [((0, 1, 0), Fraction(1, 2))]
    assert (x - x).is_zero()


def test_parse_poly_forms():
    assert parse_poly("2*x*z + y^2", R) == 2 * x * z + y * y
    assert parse_poly("-(x - 2*y)**2/3", R) == (x - 2 * y) * (x - 2 * y) * Fraction(-1, 3)
    assert parse_poly("0", R).is_zero()
    with pytest.raises(ValueError, match="unknown variable"):
        parse_poly("w + 1", R)
    with pytest.raises(ValueError, match="unsupported"):
        parse_poly("x / y", R)


def test_rational_formatting():
    assert parse_rational("-3/6") == Fraction(-1, 2)
    # JSON payloads always carry an explicit denominator
    assert format_rational(Fraction(4, 2)) == "2/1"
    assert format_rational(Fraction(-1, 3)) == "-1/3"
    assert parse_rational(format_rational(Fraction(-7, 5))) == Fraction(-7, 5)


def test_substitution_and_derivative():
    p = x * x * y + 3 * z
    assert p.substitute({"x": y + z, "y": x, "z": Poly.const(R, 1)}, R) == (y + z) * (y + z) * x + 3
    assert p.diff("x") == 2 * x * y
    assert p.diff("z") == Poly.const(R, 3)


def test_weighted_degree():
    t = VarTable(("u1", "u2"), weights=(1, 2))
    u1, u2 = t.vars()
    assert (u1 * u1 + u2).weighted_degree() == 2
    assert len(weighted_monomials(t, 4)) == 3


def test_ratfun_reduces():
    f = RatFun(x * x - y * y, x - y)
    assert f.as_poly() == x + y


def test_solve_linear_outcomes():
    s = solve_linear([[1, 1], [1, -1]], [3, 1], 2)
    assert s.unique and s.particular == [2, 1]
    s = solve_linear([[1, 1], [2, 2]], [3, 6], 2)
    assert s.status == "family" and s.dimension == 1
    s = solve_linear([[1, 1], [2, 2]], [3, 5], 2)
    assert s.status == "inconsistent"
    s = solve_linear([], None, 1)
    assert s.dimension == 1


def test_solve_linear_on_torus_coefficients():
    # A(3a + 3b) + B(7a + 5b) = 4a - 4b, compared coefficient by coefficient
    s = solve_linear([[3, 7], [3, 5]], [4, -4], 2)
    assert s.unique and s.particular == [-8, 4]


def test_modular_solver_agrees_with_exact():
    rows = [{0: 2, 1: 1, 2: -1}, {0: -3, 1: -1, 2: 2}, {0: -2, 1: 1, 2: 2}, {0: 1, 1: 1, 2: 1}]
    rhs = [8, -11, -3, 4]
    assert solve_unique(rows, rhs, 3).particular == solve_linear(rows, rhs, 3).particular == [2, 3, -1]
