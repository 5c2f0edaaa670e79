"""Degrees of orbit closures, pullbacks of plane-cubic classes under the
determinant map, intersection multiplicities, and the induced map of GIT
quotients.

Classes of plane-cubic orbits are polynomials in the Chern classes
``e1, e2, e3`` of the three-dimensional space the cubic lives on.  The
determinant map sends a net ``S^2 U -> V`` to a cubic on ``V*`` twisted by
``det U^-2``, so each Chern root ``d`` of V becomes ``d - 2/3 u1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .exactalg import Poly, RatFun, VarTable, format_rational, solve_linear
from .orbitdata import CHERN

__all__ = [
    "CUBIC_TABLE",
    "CUBIC_CLASSES",
    "degree",
    "delta_images",
    "delta_pullback",
    "MultiplicityResult",
    "solve_multiplicities",
    "pullback_identities",
    "PULLBACK_IDENTITIES",
    "GitReport",
    "git_map_check",
]

CUBIC_TABLE = VarTable(("e1", "e2", "e3"), (1, 2, 3))


def _e(name: str) -> Poly:
    return Poly.var(CUBIC_TABLE, name)


def _cubic_classes() -> dict[str, Poly]:
    e1, e2, e3 = _e("e1"), _e("e2"), _e("e3")
    a = 12 * e1 ** 3 + 6 * e1 * e2 + 27 * e3
    return {
        "nu": 24 * e1 ** 2,
        "theta": 18 * e1 ** 2 + 9 * e2,
        "Omega": 36 * e1 ** 3 + 18 * e1 * e2,
        "A": a,
        "K": e1 * a,
    }


CUBIC_CLASSES = _cubic_classes()


def _chern(name: str) -> Poly:
    return Poly.var(CHERN, name)


def degree(cls: Poly) -> int:
    """Degree of the cone with this class: ``u = 0`` and ``v_i = binom(3, i)``."""
    if cls.weighted_degree() is None:
        raise ValueError("class is not weighted-homogeneous")
    val = cls({"u1": 0, "u2": 0, "u3": 0, "v1": 3, "v2": 3, "v3": 1})
    val = Fraction(val)
    if val.denominator != 1:
        raise ArithmeticError(f"degree {val} is not an integer")
    return int(val)


@lru_cache(maxsize=None)
def delta_images() -> dict[str, Poly]:
    """``e_i -> sigma_i(d_j - 2/3 u1)`` written in ``u1, v1, v2, v3``."""
    shift = _chern("u1").scale(Fraction(-2, 3))
    vs = [Poly.const(CHERN, 1), _chern("v1"), _chern("v2"), _chern("v3")]
    out = {}
    for i in (1, 2, 3):
        total = Poly.zero(CHERN)
        for j in range(i + 1):
            total = total + vs[j] * shift ** (i - j) * comb(3 - j, i - j)
        out[f"e{i}"] = total
    return out


def delta_pullback(cls: Poly | str) -> Poly:
    if isinstance(cls, str):
        cls = CUBIC_CLASSES[cls]
    return cls.substitute(delta_images(), CHERN)


# ---------------------------------------------------------------------------
# multiplicities


@dataclass
class MultiplicityResult:
    target: str
    coefficients: list[tuple[str, Fraction]]
    unique: bool
    status: str
    kernel_dimension: int = 0
    verified: bool = False  # sum of mu_i [Y_i] equals the pullback monomial by monomial

    def as_dict(self) -> dict[str, Fraction]:
        return dict(self.coefficients)

    def values(self) -> tuple[Fraction, ...]:
        return tuple(c for _, c in self.coefficients)

    def to_json(self) -> dict:
        return {"target": self.target, "status": self.status, "unique": self.unique,
                "kernel_dimension": self.kernel_dimension, "verified": self.verified,
                "coefficients": [{"class": n, "mu": format_rational(c)} for n, c in self.coefficients]}


def solve_multiplicities(target: str | Poly, candidates: list[tuple[str, Poly]],
                         name: str | None = None) -> MultiplicityResult:
    """Solve ``delta^*(target) = sum mu_i candidate_i`` exactly."""
    tname = name or (target if isinstance(target, str) else "target")
    lhs = delta_pullback(target)
    d = lhs.weighted_degree()
    for cname, c in candidates:
        if c.weighted_degree() != d:
            raise ValueError(f"candidate {cname} has degree {c.weighted_degree()}, pullback has {d}")
    monos = sorted(set(lhs.terms).union(*(c.terms for _, c in candidates)))
    rows = [[c.coeff(m) for _, c in candidates] for m in monos]
    rhs = [lhs.coeff(m) for m in monos]
    sol = solve_linear(rows, rhs, len(candidates))
    if sol.status == "inconsistent":
        return MultiplicityResult(tname, [], False, "not in span", -1)
    coeffs = [(cname, Fraction(x)) for (cname, _), x in zip(candidates, sol.particular)]
    recon = Poly.zero(CHERN)
    for (_, c), (_, mu) in zip(candidates, coeffs):
        recon = recon + c.scale(mu)
    return MultiplicityResult(tname, coeffs, sol.unique, sol.status,
                              len(sol.nullspace), recon == lhs)


def _orbit_class(name: str) -> Poly:
    from .resolver import orbit_class

    return orbit_class(name)


def _candidates(labels: tuple[str, ...]) -> list[tuple[str, Poly]]:
    out = []
    for s in labels:
        if "*" in s and s.split("*", 1)[0] in ("u1", "v1"):
            var, orb = s.split("*", 1)
            out.append((s, _chern(var) * _orbit_class(orb.strip("[]"))))
        else:
            out.append((s, _orbit_class(s)))
    return out


# target class, candidate components, printed coefficients
PULLBACK_IDENTITIES = (
    ("nu", ("C",), (3,)),
    ("theta", ("D", "D*"), (4, 1)),
    ("Omega", ("F", "F*"), (9, 6)),
    ("A", ("E", "E*", "F"), (8, 1, 2)),
    # the printed residual 2(v1 - 2u1)[F] split over u1[F] and v1[F]
    ("K", ("(1^4)", "G", "G*", "u1*[F]", "v1*[F]"),
     (12, 4, Fraction(1, 2), -4, 2)),
)


def pullback_identities() -> list[tuple[MultiplicityResult, tuple]]:
    out = []
    for tgt, labels, printed in PULLBACK_IDENTITIES:
        res = solve_multiplicities(tgt, _candidates(labels), tgt)
        out.append((res, tuple(Fraction(p) for p in printed)))
    return out


# ---------------------------------------------------------------------------
# the induced map of GIT quotients


_K_TABLE = VarTable(("k",))
_S_TABLE = VarTable(("s",))


def _reverse(p: Poly, m: int, table: VarTable) -> Poly:
    """``x^m p(1/x)`` for a univariate ``p`` of degree at most ``m``."""
    return Poly(table, {(m - e[0],): c for e, c in p.terms.items()})


def _udeg(p: Poly) -> int:
    return max(e[0] for e in p.terms)


def root_multiplicity(p: Poly, root: Fraction) -> int:
    """Order of vanishing of a univariate polynomial at ``root``."""
    lin = Poly.var(p.table, p.table.names[0]) - Poly.const(p.table, root)
    n = 0
    while not p.is_zero():
        q = p.divide_exact(lin)
        if q is None:
            break
        p = q
        n += 1
    return n


def printed_chart() -> RatFun:
    """``4 y^3 / ((x - 4y)(x - y)^2)`` in the chart ``y = 1``."""
    x = Poly.var(_K_TABLE, "k")
    return RatFun(Poly.const(_K_TABLE, 4), (x - 4) * (x - 1) ** 2)


@dataclass
class GitReport:
    j_of_k: RatFun
    sign: int | None  # j = sign * printed chart, None if neither sign works
    identity_on_slice: bool
    fibers: dict = field(default_factory=dict)  # j value -> {k root: multiplicity}
    b_multiplicity: int = 0
    k_B: Fraction | None = None
    k_Bstar: Fraction | None = None

    @property
    def ok(self) -> bool:
        return (self.sign is not None and self.identity_on_slice and self.b_multiplicity == 2
                and self.k_B == 1 and self.k_Bstar == 4)


def _fiber(num: Poly, den: Poly, value) -> dict:
    """Roots with multiplicity of ``num - value*den`` among small rationals, plus infinity."""
    if value is None:
        f = den
        top = _udeg(num)
    else:
        f = num - den.scale(value)
        top = max(_udeg(num), _udeg(den))
    out = {}
    # rational roots: 0, then divisors of the lowest coefficient over the leading one
    cands = {Fraction(0)}
    low = min(e[0] for e in f.terms)
    ratio = Fraction(f.coeff((low,))) / Fraction(f.coeff((_udeg(f),)))
    num_c, den_c = abs(ratio.numerator), ratio.denominator
    for a in range(1, num_c + 1):
        if num_c % a == 0:
            for b in range(1, den_c + 1):
                if den_c % b == 0:
                    cands.update({Fraction(a, b), Fraction(-a, b)})
    for r in sorted(cands):
        m = root_multiplicity(f, r)
        if m:
            out[str(r)] = m
    if _udeg(f) < top:
        out["infinity"] = top - _udeg(f)
    return out


def git_map_check() -> GitReport:
    """Express ``j = 4a^3/Delta`` on the slice as a function of ``k``.

    On the slice ``k = 12 g^2 / (3 g^2 - c)``, so ``g = 1``, ``c = 3 - 12 s``
    gives ``k = 1/s``; substituting and reversing in ``s`` yields ``j(k)``.
    """
    from .invariants.semi import k_of_nu, slice_values

    sv = slice_values()
    a, disc = sv["a"], sv["disc"]
    j_slice = RatFun(4 * a ** 3, disc)
    s = Poly.var(_S_TABLE, "s")
    sub = {"c": Poly.const(_S_TABLE, 3) - s.scale(12), "g": Poly.const(_S_TABLE, 1)}
    js = j_slice.substitute(sub, _S_TABLE)
    m = max(_udeg(js.num), _udeg(js.den))
    j_k = RatFun(_reverse(js.num, m, _K_TABLE), _reverse(js.den, m, _K_TABLE))

    chart = printed_chart()
    sign = 1 if j_k == chart else (-1 if j_k == -chart else None)

    # the same identity as rational functions in c, g
    k_slice = sv["k"]
    kpoly = {"k": k_slice}
    composed = RatFun(j_k.num).substitute(kpoly, k_slice.table) / RatFun(j_k.den).substitute(kpoly, k_slice.table)
    identity = composed == j_slice

    fibers = {"infinity": _fiber(j_k.num, j_k.den, None),
              "0": _fiber(j_k.num, j_k.den, Fraction(0)),
              "1": _fiber(j_k.num, j_k.den, Fraction(1))}
    b_mult = root_multiplicity(j_k.den, Fraction(1))
    return GitReport(j_k, sign, identity, fibers, b_mult,
                     Fraction(k_of_nu(-9, 1)), Fraction(k_of_nu(0, 1)))
