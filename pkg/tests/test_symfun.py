import pytest
from hypothesis import given, settings, strategies as st

from noc.exactalg import Poly
from noc.symfun import (
    RootContext, SchurCombo, SchurExpansionError, elem_sym, hook_partitions, partitions,
    quotient_chern, schur, schur_expand,
)
from noc.symfun import combo_to_poly


def test_partitions():
    assert partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions(10)) == 42
    assert partitions(5, max_part=2) == [(2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)]


def test_hook_partitions_exclude_the_box_corner():
    # lambda_{p+1} <= m
    assert (2, 2) not in hook_partitions(4, 1, 1)
    assert (3, 1) in hook_partitions(4, 1, 1)
    assert all(len(lam) <= 3 or lam[3] <= 3 for lam in hook_partitions(12, 3, 3))


def test_elementary_symmetric():
    ctx = RootContext(1, 3)
    b = [Poly.var(ctx.roots, n) for n in ctx.beta_names]
    assert elem_sym(2, b) == b[0] * b[1] + b[0] * b[2] + b[1] * b[2]
    assert elem_sym(3, b) == b[0] * b[1] * b[2]
    with pytest.raises(ValueError):
        elem_sym(4, b)


def test_quotient_chern_one_root_each():
    # (1 + b) / (1 + a) = 1 + (b - a) + a(a - b) + ...
    ctx = RootContext(1, 1)
    a, b = Poly.var(ctx.roots, "alpha1"), Poly.var(ctx.roots, "beta1")
    assert quotient_chern(ctx, 1) == b - a
    assert quotient_chern(ctx, 2) == a * (a - b)
    assert quotient_chern(ctx, 3) == a * a * (b - a)


def test_jacobi_trudi():
    ctx = RootContext(1, 1)
    a, b = Poly.var(ctx.roots, "alpha1"), Poly.var(ctx.roots, "beta1")
    assert schur(ctx, (1, 1)) == b * (b - a)
    assert schur(ctx, (2, 2)).is_zero()


def test_combo_parse_and_format():
    c = SchurCombo.parse("8*D[433] + 4*D[3331]")
    assert c.size == 10
    assert c.terms == {(4, 3, 3): 8, (3, 3, 3, 1): 4}
    assert SchurCombo.parse(str(c)) == c
    assert SchurCombo.from_json(c.to_json()) == c


CTX = RootContext(3, 3)
WEIGHT = 6
BASIS = hook_partitions(WEIGHT, 3, 3)


@settings(max_examples=15, derandomize=True, deadline=None)
@given(st.dictionaries(st.sampled_from(BASIS), st.integers(-30, 30).filter(bool), min_size=1, max_size=5))
def test_schur_roundtrip(terms):
    combo = SchurCombo(terms)
    assert schur_expand(combo_to_poly(combo, CTX), CTX) == combo


def test_schur_expand_rejects_non_combinations():
    # a single root is not symmetric, so it has no Schur expansion
    with pytest.raises(SchurExpansionError):
        schur_expand(Poly.var(CTX.roots, "alpha1"), CTX)
