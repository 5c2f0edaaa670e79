"""The degree 6 and 12 invariants of nets, stability and the discriminant."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from ..exactalg import Poly, RatFun, format_rational
from ..orbitdata import QUAD_MONOMIALS, orbit
from .cubics import aronhold, aronhold_polys, evaluate
from .nets import Net, det_map, flip_xy, generic_net, net_table, nu, nu_net, plucker, slice_table
from .wedge import I2, theta_printed_poly


def J6(n):
    """``I2`` of the Plücker image."""
    return I2(plucker(n))


def J12(n):
    """``-48 a(det_map(n))``.  ``a`` is invariant under the ``(-x, -y, z)``
    reparametrisation used for the slice, so no flip is needed here."""
    a, _ = aronhold(det_map(n))
    return -48 * a


@lru_cache(maxsize=None)
def J6_poly() -> Poly:
    return J6(generic_net())


@lru_cache(maxsize=None)
def J12_poly() -> Poly:
    A, _ = aronhold_polys()
    return evaluate(A, det_map(generic_net())).scale(-48)


def J6_sign_convention() -> int:
    """+1 when ``J6(nu_{0,1}) = 24`` as stated, -1 if the composition gives -24."""
    v = J6(nu(0, 1))
    if v == 24:
        return 1
    if v == -24:
        return -1
    raise ArithmeticError(f"J6(nu_0,1) = {v}, expected +-24")


@dataclass
class Stability:
    J6: Fraction
    J12: Fraction
    nullcone: bool
    k: Fraction | None  # None means infinity (or undefined in the nullcone)

    def verdict(self) -> str:
        if self.nullcone:
            return "nullcone"
        return "k = infinity" if self.k is None else f"k = {self.k}"

    def to_json(self) -> dict:
        return {"J6": format_rational(self.J6), "J12": format_rational(self.J12), "nullcone": self.nullcone,
                "k": None if self.nullcone else ("infinity" if self.k is None else format_rational(self.k))}


def stability(n) -> Stability:
    j6, j12 = Fraction(J6(n)), Fraction(J12(n))
    if j6 == 0 and j12 == 0:
        return Stability(j6, j12, True, None)
    return Stability(j6, j12, False, None if j12 == 0 else j6 * j6 / j12)


def orbit_net(name: str) -> Net:
    return Net(orbit(name).representative)


def semistable_table(names=("D", "D*", "E", "E*")) -> dict:
    return {n: stability(orbit_net(n)) for n in names}


# ---------------------------------------------------------------------------
# symbolic slice identities


def slice_values() -> dict:
    """J6, J12, k, a, b and the discriminant on the slice ``nu_{c,g}``."""
    net = nu()
    j6 = J6(net)
    j12 = J12(net)
    a, b = aronhold(flip_xy(det_map(net)))
    disc = 4 * a ** 3 + 27 * b ** 2
    return {"J6": j6, "J12": j12, "k": RatFun(j6 * j6, j12), "a": a, "b": b, "disc": disc}


@dataclass
class DiscriminantReport:
    proportional: bool
    constant: Fraction | None  # kappa with kappa * Delta = (J6^2 - J12)^2 (J6^2 - 4 J12)
    printed_constants: dict = field(default_factory=dict)
    factored_ok: bool = False

    def matches(self) -> dict:
        return {k: v == self.constant for k, v in self.printed_constants.items()}


def discriminant_check() -> DiscriminantReport:
    s = slice_values()
    j6, j12, disc = s["J6"], s["J12"], s["disc"]
    rhs = (j6 * j6 - j12) ** 2 * (j6 * j6 - 4 * j12)
    const = None
    prop = False
    if not disc.is_zero():
        e, c = disc.leading()
        const = Fraction(rhs.coeff(e)) / c
        prop = disc.scale(const) == rhs
    t = slice_table()
    g = Poly.var(t, "g")
    a = s["a"]
    factored = 4 * (a + 3 * g * g) * (a + 12 * g * g) ** 2
    return DiscriminantReport(
        prop, const if prop else None,
        {"-2^8*3^3": Fraction(-(2 ** 8) * 3 ** 3), "48^3": Fraction(48 ** 3)},
        factored == disc,
    )


@dataclass
class ThetaReport:
    proportional: bool
    scalar: Fraction | None  # J6 = scalar * theta


def theta_check() -> ThetaReport:
    j6 = J6_poly()
    th = theta_printed_poly()
    e, c = th.leading()
    s = Fraction(j6.coeff(e)) / c
    return ThetaReport(th.scale(s) == j6, s if th.scale(s) == j6 else None)


# ---------------------------------------------------------------------------
# sl3 x sl3 invariance


def _u_derivation(i: int, j: int) -> dict:
    """``x_i d/dx_j`` acting on every quadric of the net."""
    t = net_table()
    images = {n: Poly.zero(t) for n in t.names}
    for r in range(3):
        for m, e in enumerate(QUAD_MONOMIALS):
            if e[j] == 0:
                continue
            f = list(e)
            f[j] -= 1
            f[i] += 1
            tgt = t.names[6 * r + QUAD_MONOMIALS.index(tuple(f))]
            images[tgt] = images[tgt] + Poly.var(t, t.names[6 * r + m]).scale(e[j])
    return images


def _v_derivation(r: int, s: int) -> dict:
    """Add quadric ``s`` into quadric ``r``."""
    t = net_table()
    images = {n: Poly.zero(t) for n in t.names}
    for m in range(6):
        images[t.names[6 * r + m]] = Poly.var(t, t.names[6 * s + m])
    return images


def lie_generators() -> list[tuple[str, dict]]:
    out = []
    for i in range(3):
        for j in range(3):
            if i != j:
                out.append((f"U:E{i + 1}{j + 1}", _u_derivation(i, j)))
    for r in range(3):
        for s in range(3):
            if r != s:
                out.append((f"V:E{r + 1}{s + 1}", _v_derivation(r, s)))
    return out


def invariance_check(polys=None) -> dict:
    """``{(poly name, generator): derivation is zero}`` for J6 and J12."""
    if polys is None:
        polys = {"J6": J6_poly(), "J12": J12_poly()}
    out = {}
    for pname, p in polys.items():
        for gname, D in lie_generators():
            out[(pname, gname)] = p.derivation(D).is_zero()
    return out


def relative_invariant_check() -> bool:
    """``J6(lambda^-2 mu n) = lambda^-12 mu^6 J6(n)``, i.e. homogeneity of degree 6."""
    p = J6_poly()
    return p.weighted_degree() == 6 and J12_poly().weighted_degree() == 12


def slice_independence() -> Fraction:
    """Jacobian determinant of ``(c, g) -> (J6, J12)`` on the slice (a constant)."""
    s = slice_values()
    j6, j12 = s["J6"], s["J12"]
    jac = j6.diff("c") * j12.diff("g") - j6.diff("g") * j12.diff("c")
    if not jac.is_constant():
        raise ArithmeticError("slice Jacobian is not constant")
    return Fraction(jac.constant_term())


def k_of_nu(c, g):
    return stability(nu_net(c, g)).k
