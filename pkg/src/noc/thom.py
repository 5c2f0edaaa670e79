"""Thom polynomials of Sigma^0 contact singularities by localization.

The sum runs over the twenty 3-subsets ``H`` of the six source weights
``W = {2a1, 2a2, 2a3, a1+a2, a1+a3, a2+a3}`` (``a`` = source Chern roots):

    Tp = prod_{i,j} (beta_j - alpha_i) * sum_H D_H [f]|_H / e_H

with ``D_H = prod_{w not in H} prod_j (beta_j - w)`` and
``e_H = prod_{w1 not in H, w2 in H} (w2 - w1)``.

Everything is done over the mixed coordinates ``alpha_1..3, b_1..b_p``
(``b_k = sigma_k(beta)``), which is exact because ``prod_j (beta_j - w)``
only depends on the ``b``'s.  All 20 terms are put over the common
denominator ``V = prod_{i<j} (w_i - w_j)``; the numerator is split by
``b``-monomial and each alpha-coefficient is divided by ``V`` exactly.  An
inexact division means the sum is not a polynomial and is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exactalg import Poly, VarTable
from .orbitdata import CHERN, orbit
from .symfun import RootContext, SchurCombo, elem_sym, schur_expand, symmetric_reduce

__all__ = [
    "SOURCE_WEIGHTS",
    "LocalizationError",
    "TpResult",
    "localize",
    "tp_equidimensional",
    "tp_orbit",
    "localization_sum",
    "prefactor",
    "EQUIDIMENSIONAL_ORBITS",
]

# coefficients over (alpha1, alpha2, alpha3)
SOURCE_WEIGHTS = ((2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1))

EQUIDIMENSIONAL_ORBITS = ("A_finite", "A_infinity", "D", "E")


class LocalizationError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def _alpha_table() -> VarTable:
    return VarTable(("alpha1", "alpha2", "alpha3"))


@lru_cache(maxsize=None)
def _mixed_table(p: int) -> VarTable:
    names = ("alpha1", "alpha2", "alpha3") + tuple(f"b{k}" for k in range(1, p + 1))
    return VarTable(names, (1, 1, 1) + tuple(range(1, p + 1)))


def _form(coeffs, table: VarTable) -> Poly:
    return Poly.linear(table, dict(zip(("alpha1", "alpha2", "alpha3"), coeffs)))


def _target_factor(w: Poly, p: int) -> Poly:
    """``prod_j (beta_j - w) = sum_k b_k (-w)^(p-k)`` over the mixed table."""
    t = _mixed_table(p)
    w = w.retable(t)
    total = Poly.zero(t)
    neg = -w
    power = Poly.const(t, 1)
    # k runs p, p-1, ..., 0 so that the power of -w grows
    for k in range(p, -1, -1):
        bk = Poly.const(t, 1) if k == 0 else Poly.var(t, f"b{k}")
        total = total + bk * power
        power = power * neg
    return total


def _pair_product(idx, forms) -> Poly:
    out = Poly.const(forms[0].table, 1)
    for i, j in combinations(idx, 2):
        out = out * (forms[i] - forms[j])
    return out


def _restricted_class(f_class: Poly, H_forms) -> Poly:
    ta = _alpha_table()
    alphas = [Poly.var(ta, n) for n in ta.names]
    images = {}
    for i in (1, 2, 3):
        images[f"u{i}"] = elem_sym(i, alphas)
        images[f"v{i}"] = elem_sym(i, list(H_forms))
    return f_class.substitute(images, ta)


@dataclass
class TpResult:
    """Localization output for one class and target dimension ``p``.

    ``elementary`` is the Thom polynomial in ``a_i = sigma_i(alpha)``,
    ``b_k = sigma_k(beta)``; ``sum_part`` is the localization sum before
    the prefactor, in the same coordinates.
    """

    name: str
    p: int
    degree: int
    elementary: Poly
    sum_part: Poly
    schur: SchurCombo | None = None

    @property
    def context(self) -> RootContext:
        return RootContext(3, self.p)

    def roots(self) -> Poly:
        return self.context.to_roots(self.elementary)

    def to_json(self) -> dict:
        out = {"orbit": self.name, "p": self.p, "degree": self.degree,
               "elementary": self.elementary.to_json()}
        if self.schur is not None:
            out["schur"] = self.schur.to_json()
            out["schur_str"] = str(self.schur)
        return out


def localization_sum(f_class: Poly, p: int) -> Poly:
    """The H-sum over the mixed table ``alpha_1..3, b_1..b_p``."""
    if f_class.table != CHERN:
        raise ValueError("class must be a polynomial in u1..u3, v1..v3")
    ta = _alpha_table()
    tm = _mixed_table(p)
    forms = [_form(c, ta) for c in SOURCE_WEIGHTS]
    target_factors = [_target_factor(w, p) for w in forms]
    vandermonde = _pair_product(range(6), forms)

    numerator = Poly.zero(tm)
    for H in combinations(range(6), 3):
        rest = tuple(i for i in range(6) if i not in H)
        # V / e_H up to the sign of the crossing pairs
        sign = 1
        for i in H:
            for j in rest:
                if i > j:
                    sign = -sign
        alpha_part = _restricted_class(f_class, [forms[i] for i in H])
        if alpha_part.is_zero():
            continue
        alpha_part = alpha_part * _pair_product(H, forms) * _pair_product(rest, forms)
        D = target_factors[rest[0]] * target_factors[rest[1]] * target_factors[rest[2]]
        numerator = numerator + (alpha_part.scale(sign).retable(tm) * D)

    # split by b-monomial and divide each alpha-coefficient by V
    groups: dict[tuple[int, ...], dict] = {}
    for e, c in numerator.terms.items():
        groups.setdefault(e[3:], {})[e[:3]] = c
    out: dict = {}
    for bexp, sub in groups.items():
        q = Poly(ta, sub).divide_exact(vandermonde)
        if q is None:
            raise LocalizationError(
                f"localization sum is not a polynomial (b-exponent {bexp})")
        for e, c in q.terms.items():
            out[e + bexp] = c
    return Poly(tm, out)


def _to_elementary(poly: Poly, ctx: RootContext) -> Poly:
    try:
        return symmetric_reduce(poly, [(ctx.alpha_names, ctx.a_names)], ctx.elementary)
    except ValueError as exc:
        raise LocalizationError("localization sum is not symmetric in the source roots") from exc


def prefactor(p: int) -> Poly:
    """``prod_{i,j} (beta_j - alpha_i)`` in elementary coordinates."""
    ctx = RootContext(3, p)
    tm = _mixed_table(p)
    out = Poly.const(tm, 1)
    for n in ("alpha1", "alpha2", "alpha3"):
        out = out * _target_factor(Poly.var(_alpha_table(), n), p)
    return _to_elementary(out, ctx)


def localize(f_class: Poly, p: int, name: str = "", expand: bool = True) -> TpResult:
    """Localization formula for the Sigma^0 class ``f_class`` into ``C^p``."""
    if p < 3:
        raise ValueError("p must be at least 3")
    d = f_class.weighted_degree()
    if d is None:
        raise ValueError("class is not weighted-homogeneous")
    ctx = RootContext(3, p)
    expected = 6 * p + d - 9
    if f_class.is_zero():
        zero = Poly.zero(ctx.elementary)
        return TpResult(name, p, expected, zero, zero, SchurCombo() if expand else None)
    summed = _to_elementary(localization_sum(f_class, p), ctx)
    total = summed * prefactor(p)
    deg = total.weighted_degree()
    if deg is not None and deg != expected:
        raise LocalizationError(f"degree {deg}, expected {expected}")
    result = TpResult(name, p, expected, total, summed)
    if expand:
        result.schur = schur_expand(total, ctx)
    return result


_AMU_NAMES = {
    "A_finite": "finite", "A_mu": "finite", "A": "finite",
    "A_infinity": "infinity", "A_inf": "infinity", "A_∞": "infinity",
}


def _class_for(name: str) -> Poly:
    from .resolver import class_Amu, orbit_class

    if name in _AMU_NAMES:
        return class_Amu(_AMU_NAMES[name])
    o = orbit(name)
    if o.stratum != "Σ0":
        raise ValueError(f"orbit {o.name} is not a Sigma^0 net; its Thom polynomial is not covered")
    return orbit_class(o.name)


def tp_equidimensional(name: str, p: int = 3) -> SchurCombo:
    """Schur form of the localization formula at (formal) ``p``, default 3."""
    return localize(_class_for(name), p, name=name).schur


def tp_orbit(name: str, p: int = 3, expand: bool = True) -> TpResult:
    return localize(_class_for(name), p, name=name, expand=expand)
