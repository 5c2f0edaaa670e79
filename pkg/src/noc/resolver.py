"""Equivariant classes of orbit closures in the space of nets of conics.

* :func:`solve_class` solves the restriction equations for an orbit of
  codimension at least two: the class restricts to zero at every other
  orbit of no larger codimension and at the generic codimension-one orbit,
  and to the Euler class of the normal space at the orbit itself.
* :func:`class_Amu` handles the codimension-one family through the normal
  slice at the orbit ``C``.
* :func:`poincare_identity_check` sums the shifted Poincare series of all
  orbits.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

import numpy as np

from .exactalg import Poly, RatFun, VarTable, modular_unique_solve, weighted_monomials
from .orbitdata import (CHERN, ORBITS, LinForm, OrbitRecord, derived_normal_weights, euler_class,
                        orbit, restriction_images)
from .symfun import elem_sym

__all__ = [
    "ClassSolveError",
    "ClassResult",
    "solve_class",
    "class_Amu",
    "slice_data",
    "generic_Amu_images",
    "poincare_identity_check",
    "chern_var",
    "factored_str",
]


def chern_var(name: str) -> Poly:
    return Poly.var(CHERN, name)


class ClassSolveError(ValueError):
    def __init__(self, message: str, status: str, dimension: int | None = None):
        super().__init__(message)
        self.status = status
        self.dimension = dimension


@dataclass
class ClassResult:
    orbit: str
    degree: int
    poly: Poly
    unknowns: int
    equations: int
    constraint_orbits: list[str] = field(default_factory=list)
    verified: bool = False


# ---------------------------------------------------------------------------
# slice data at the orbit C


@dataclass(frozen=True)
class SliceData:
    u_weights: tuple[LinForm, ...]
    v_weights: tuple[LinForm, ...]
    c_weight: LinForm  # the z^2 direction
    g_weight: LinForm  # the xz - y^2 direction


def slice_data() -> SliceData:
    return SliceData(
        u_weights=(LinForm.parse("2alpha"), LinForm.parse("alpha+beta"), LinForm.parse("2beta")),
        v_weights=(LinForm.parse("2alpha+2beta"), LinForm.parse("alpha+3beta"), LinForm.parse("4alpha")),
        c_weight=LinForm.parse("4alpha-4beta"),
        g_weight=LinForm.parse("2alpha-2beta"),
    )


_SLICE_TABLE = VarTable(("alpha", "beta"))
_A_TABLE = VarTable(("alpha",))


def _images(table: VarTable, us: Sequence[Poly], vs: Sequence[Poly]) -> dict[str, Poly]:
    out = {}
    for i in range(1, 4):
        out[f"u{i}"] = elem_sym(i, us)
        out[f"v{i}"] = elem_sym(i, vs)
    return out


def slice_images() -> dict[str, Poly]:
    sd = slice_data()
    return _images(_SLICE_TABLE, [w.to_poly(_SLICE_TABLE) for w in sd.u_weights],
                   [w.to_poly(_SLICE_TABLE) for w in sd.v_weights])


def generic_Amu_images() -> dict[str, Poly]:
    """Stabiliser torus of a generic slice point: alpha = beta in the slice torus."""
    a = Poly.var(_A_TABLE, "alpha")
    return _images(_A_TABLE, [2 * a] * 3, [4 * a] * 3)


def class_Amu(mu: str = "finite") -> Poly:
    """Class of the codimension-one orbit closure A_mu (``mu`` = ``"finite"`` or ``"infinity"``).

    Writes the class as ``A*u1 + B*v1`` and matches its restriction to the
    slice torus against the weight of the complementary slice direction.
    """
    from .exactalg import solve_linear

    sd = slice_data()
    if mu in ("finite", "generic"):
        target = sd.c_weight.to_poly(_SLICE_TABLE)
    elif mu in ("infinity", "inf", "∞"):
        target = sd.g_weight.to_poly(_SLICE_TABLE)
    else:
        raise ValueError(f"mu must be 'finite' or 'infinity', not {mu!r}")
    imgs = slice_images()
    basis = [imgs["u1"], imgs["v1"]]
    monos = sorted(set().union(*(b.terms for b in basis), target.terms))
    rows = [[b.coeff(m) for b in basis] for m in monos]
    rhs = [target.coeff(m) for m in monos]
    sol = solve_linear(rows, rhs, 2)
    if not sol.unique:
        raise ClassSolveError(f"slice equation for A_{mu} is {sol.status}", sol.status, sol.dimension)
    A, B = sol.particular
    return chern_var("u1").scale(A) + chern_var("v1").scale(B)


def class_Amu_coefficients(mu: str = "finite") -> tuple:
    p = class_Amu(mu)
    return p.coeff((1, 0, 0, 0, 0, 0)), p.coeff((0, 0, 0, 1, 0, 0))


# ---------------------------------------------------------------------------
# restriction equations


def _sigma_values(vals: Sequence[int]) -> list[int]:
    e = [1, 0, 0, 0]
    for v in vals:
        for k in range(3, 0, -1):
            e[k] += e[k - 1] * v
    return e[1:]


class _Constraint:
    """One restriction equation evaluated at random integer torus points."""

    def __init__(self, label: str, u_forms, v_forms, params: tuple[str, ...], rhs_forms, npoints: int,
                 rng: random.Random):
        self.label = label
        self.params = params
        self.points = [[rng.randint(-60, 60) for _ in params] for _ in range(npoints)]
        self.uv = []
        self.rhs = []
        for pt in self.points:
            env = dict(zip(params, pt))
            uvals = [int(f.evaluate(env)) for f in u_forms]
            vvals = [int(f.evaluate(env)) for f in v_forms]
            self.uv.append(_sigma_values(uvals) + _sigma_values(vvals))
            if rhs_forms is None:
                self.rhs.append(0)
            else:
                r = 1
                for f in rhs_forms:
                    r *= int(f.evaluate(env))
                self.rhs.append(r)


def _monomial_values(uv: np.ndarray, exps: np.ndarray, p: int) -> np.ndarray:
    """``prod_j uv[:, j] ** exps[:, j]`` modulo p, shape (points, monomials)."""
    npts = uv.shape[0]
    maxe = int(exps.max()) if exps.size else 0
    out = np.ones((npts, exps.shape[0]), dtype=np.int64)
    for j in range(uv.shape[1]):
        base = uv[:, j] % p
        powers = np.ones((npts, maxe + 1), dtype=np.int64)
        for k in range(1, maxe + 1):
            powers[:, k] = (powers[:, k - 1] * base) % p
        out = (out * powers[:, exps[:, j]]) % p
    return out


def _forms_dim(nparams: int, d: int) -> int:
    return comb(d + nparams - 1, nparams - 1)


def _constraints_for(target: OrbitRecord, dataset: Sequence[OrbitRecord], seed: int,
                     with_generic: bool = True) -> list[_Constraint]:
    d = target.codim
    rng = random.Random(seed)
    cons = []
    for o in dataset:
        if o.codim > d:
            continue
        rhs = derived_normal_weights(o) if o.name == target.name else None
        npts = _forms_dim(len(o.params), d) + 2
        cons.append(_Constraint(o.name, o.u_weights, o.v_weights, o.params, rhs, npts, rng))
    if with_generic and d >= 2:
        a = LinForm.parse("alpha")
        cons.append(_Constraint("A_mu", (a.scale(2),) * 3, (a.scale(4),) * 3, ("alpha",), None, 2, rng))
    return cons


def solve_class(target: OrbitRecord | str, dataset: Sequence[OrbitRecord] | None = None,
                seed: int = 1729, with_generic: bool = True) -> ClassResult:
    """The unique degree-codim class satisfying the restriction equations.

    Raises :class:`ClassSolveError` with status ``"non-unique"`` or
    ``"inconsistent"`` when the equations do not pin down a single class.
    """
    dataset = tuple(dataset) if dataset is not None else ORBITS
    if isinstance(target, str):
        target = orbit(target, dataset)
    d = target.codim
    if d < 2:
        raise ValueError("the restriction solver needs codimension at least 2")
    if target.name == "0":
        raise ValueError("the class of the zero orbit is not computed")
    monos = weighted_monomials(CHERN, d)
    n = len(monos)
    exps = np.array(monos, dtype=np.int64)
    cons = _constraints_for(target, dataset, seed, with_generic)
    uv_all = [row for c in cons for row in c.uv]
    rhs_all = [r for c in cons for r in c.rhs]
    nrows = len(uv_all)

    def block(p, indices):
        sel = range(nrows) if indices is None else indices
        uv = np.array([[x % p for x in uv_all[i]] for i in sel], dtype=np.int64)
        b = np.array([rhs_all[i] % p for i in sel], dtype=np.int64)
        return _monomial_values(uv, exps, p), b

    def accept(x):
        poly = Poly(CHERN, {m: c for m, c in zip(monos, x) if c})
        return not check_restrictions(poly, target, dataset, with_generic)

    sol, rank, consistent = modular_unique_solve(block, nrows, n, accept=accept)
    if not consistent:
        raise ClassSolveError(f"restriction equations for {target.name} are inconsistent", "inconsistent")
    if rank < n:
        raise ClassSolveError(
            f"restriction equations for {target.name} do not determine the class: "
            f"rank {rank} < {n} unknowns (solution space dimension at most {n - rank})",
            "non-unique", n - rank)
    if sol is None:
        raise ClassSolveError(f"no rational solution for {target.name} passed the exact check", "inconsistent")
    poly = Poly(CHERN, {m: c for m, c in zip(monos, sol) if c})
    return ClassResult(target.name, d, poly, n, nrows, [c.label for c in cons], verified=True)


def check_restrictions(poly: Poly, target: OrbitRecord, dataset: Sequence[OrbitRecord] | None = None,
                       with_generic: bool = True) -> list[str]:
    """Names of the restriction equations that ``poly`` violates (exact)."""
    dataset = tuple(dataset) if dataset is not None else ORBITS
    bad = []
    for o in dataset:
        if o.codim > target.codim:
            continue
        img = poly.substitute(restriction_images(o), o.torus_table)
        want = euler_class(o) if o.name == target.name else Poly.zero(o.torus_table)
        if img != want:
            bad.append(o.name)
    if with_generic and not poly.substitute(generic_Amu_images(), _A_TABLE).is_zero():
        bad.append("A_mu")
    return bad


@lru_cache(maxsize=None)
def orbit_class(name: str) -> Poly:
    """Cached class of a named orbit (codim 1 names: ``A_mu``, ``A_inf``)."""
    if name in ("A_mu", "A", "A_finite"):
        return class_Amu("finite")
    if name in ("A_inf", "A_infinity"):
        return class_Amu("infinity")
    return solve_class(name).poly


# ---------------------------------------------------------------------------
# printing


_CANDIDATE_FACTORS = None


def _candidate_factors() -> list[Poly]:
    u1, v1 = chern_var("u1"), chern_var("v1")
    return [v1 - 2 * u1, v1, u1]


def factored_str(p: Poly) -> str:
    """Compact form: content times powers of small linear factors times a cofactor.

    E.g. ``8*(v1 - 2*u1)^2``.  The expanded form is always ``str(p)``.
    """
    if p.is_zero():
        return "0"
    content = abs(p.content())
    rest = p.scale(Fraction(1) / content)
    factors = []
    for f in _candidate_factors():
        k = 0
        while rest.max_degree() >= 1:
            q = rest.divide_exact(f)
            if q is None:
                break
            rest = q
            k += 1
        if k:
            factors.append((f, k))
    parts = []
    for f, k in factors:
        s = str(f)
        if len(f) > 1:
            s = f"({s})"
        parts.append(s if k == 1 else f"{s}^{k}")
    if not rest.is_constant():
        s = str(rest)
        parts.append(f"({s})" if len(rest) > 1 and (parts or content != 1) else s)
    else:
        content = content * rest.constant_term()
    body = "*".join(parts)
    if not body:
        return str(content)
    if content == 1:
        return body
    if content == -1:
        return f"-{body}"
    return f"{content}*{body}"


# ---------------------------------------------------------------------------
# Poincare series identity


_T = VarTable(("t",))


def _t_poly(coeffs: dict[int, int]) -> Poly:
    return Poly(_T, {(k,): c for k, c in coeffs.items()})


def poincare_term(o: OrbitRecord) -> RatFun:
    """``t^codim / prod_j (1 - t^{d_j})``."""
    num = _t_poly({o.codim: 1})
    den = _t_poly({0: 1})
    for dj in o.poincare_degrees:
        den = den * _t_poly({0: 1, dj: -1})
    return RatFun(num, den)


@dataclass
class PoincareReport:
    passed: bool
    residue: RatFun
    lhs: RatFun
    rhs: RatFun
    # rows listing a different number of generator degrees than their torus rank
    rank_mismatches: tuple = ()
    # (row, degrees) repairs that make the identity hold
    repairs: tuple = ()


def _poincare_residue(dataset: Sequence[OrbitRecord], degrees: dict | None = None):
    degrees = degrees or {}
    lhs = RatFun(_t_poly({0: 1, 1: 1}), _t_poly({0: 1, 1: -1}))
    for o in dataset:
        ds = degrees.get(o.name, o.poincare_degrees)
        lhs = lhs + poincare_term(replace(o, poincare_degrees=tuple(ds)))
    den = _t_poly({0: 1})
    for dj in (1, 1, 2, 2, 3, 3):
        den = den * _t_poly({0: 1, dj: -1})
    rhs = RatFun(_t_poly({0: 1}), den)
    return lhs, rhs, lhs - rhs


def poincare_identity_check(dataset: Sequence[OrbitRecord] | None = None) -> PoincareReport:
    """Open stratum ``(1+t)/(1-t)`` plus all shifted orbit series vs. ``H*(BG)``.

    When the identity fails, rows whose degree list length differs from
    the rank of their torus are reported, along with every single added
    degree (1..3) that would make the identity hold.
    """
    dataset = tuple(dataset) if dataset is not None else ORBITS
    lhs, rhs, residue = _poincare_residue(dataset)
    passed = residue.is_zero()
    mismatches = tuple(o.name for o in dataset if len(o.poincare_degrees) != len(o.params))
    repairs = []
    if not passed:
        for o in dataset:
            if o.name not in mismatches or len(o.poincare_degrees) > len(o.params):
                continue
            for extra in (1, 2, 3):
                ds = tuple(sorted(o.poincare_degrees + (extra,)))
                if _poincare_residue(dataset, {o.name: ds})[2].is_zero():
                    repairs.append((o.name, ds))
    return PoincareReport(passed, residue, lhs, rhs, mismatches, tuple(repairs))
