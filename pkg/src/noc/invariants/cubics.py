"""Ternary cubics and their two basic invariants.

The degree 4 and degree 6 invariants are not transcribed from a classical
formula.  They are found as the kernel of the six off-diagonal sl3
operators acting on polynomials in the ten cubic coefficients, and scaled
so that on ``y^2 z + x^3 + a x z^2 + b z^3`` they return ``a`` and ``b``.

Only weight-zero monomials (each of x, y, z appearing ``d`` times in total
over a degree-``d`` monomial) can carry an invariant, since anything killed
by all raising and lowering operators spans a trivial summand.  The kernel
is therefore computed on that subspace, and its dimension is asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from ..exactalg import Poly, VarTable, solve_linear
from .nets import CUBIC_MONOMIALS

CUBIC_NAMES = tuple("c_" + "x" * e[0] + "y" * e[1] + "z" * e[2] for e in CUBIC_MONOMIALS)


class InvariantError(ArithmeticError):
    pass


@lru_cache(maxsize=None)
def cubic_table() -> VarTable:
    return VarTable(CUBIC_NAMES)


def weierstrass(a, b) -> tuple:
    """Coefficients of ``y^2 z + x^3 + a x z^2 + b z^3``."""
    zero = a * 0
    out = [zero] * 10
    out[CUBIC_MONOMIALS.index((0, 2, 1))] = zero + 1
    out[CUBIC_MONOMIALS.index((3, 0, 0))] = zero + 1
    out[CUBIC_MONOMIALS.index((1, 0, 2))] = a
    out[CUBIC_MONOMIALS.index((0, 0, 3))] = b
    return tuple(out)


def cubic_derivation(i: int, j: int) -> dict:
    """Images of the coefficient variables under ``x_i d/dx_j`` (0-based).

    If ``F = sum c_m x^m`` then ``x_i dF/dx_j = sum c'_m x^m`` with each
    ``c'_m`` linear in the ``c``'s; these are the images returned.
    """
    t = cubic_table()
    images = {n: Poly.zero(t) for n in CUBIC_NAMES}
    for m, e in enumerate(CUBIC_MONOMIALS):
        if e[j] == 0:
            continue
        f = list(e)
        f[j] -= 1
        f[i] += 1
        target = CUBIC_NAMES[CUBIC_MONOMIALS.index(tuple(f))]
        images[target] = images[target] + Poly.var(t, CUBIC_NAMES[m]).scale(e[j])
    return images


OFF_DIAGONAL = tuple((i, j) for i in range(3) for j in range(3) if i != j)


def weight_zero_monomials(d: int) -> list[tuple[int, ...]]:
    out = []
    for combo in combinations_with_replacement(range(10), d):
        w = [0, 0, 0]
        for m in combo:
            for k in range(3):
                w[k] += CUBIC_MONOMIALS[m][k]
        if w == [d, d, d]:
            e = [0] * 10
            for m in combo:
                e[m] += 1
            out.append(tuple(e))
    return sorted(out, reverse=True)


@dataclass
class KernelReport:
    degree: int
    monomials: int
    weight_zero: int
    dimension: int
    invariant: Poly


@lru_cache(maxsize=None)
def invariant_kernel(d: int) -> KernelReport:
    """Kernel of the sl3 action on weight-zero degree-``d`` coefficient polynomials."""
    t = cubic_table()
    basis = weight_zero_monomials(d)
    derivs = [cubic_derivation(i, j) for i, j in OFF_DIAGONAL]
    images = []
    for e in basis:
        m = Poly.monomial(t, e)
        images.append([m.derivation(D) for D in derivs])
    rows = []
    for k in range(len(derivs)):
        keys = sorted(set().union(*(img[k].terms for img in images)))
        for key in keys:
            rows.append({col: img[k].terms[key] for col, img in enumerate(images) if key in img[k].terms})
    sol = solve_linear(rows, None, len(basis))
    total = len(list(combinations_with_replacement(range(10), d)))
    if sol.dimension != 1:
        raise InvariantError(f"degree {d}: invariant space has dimension {sol.dimension}, expected 1")
    vec = sol.nullspace[0]
    inv = Poly(t, {e: c for e, c in zip(basis, vec) if c})
    for D in derivs:
        if not inv.derivation(D).is_zero():
            raise InvariantError("kernel vector is not invariant")
    return KernelReport(d, total, len(basis), sol.dimension, inv)


def _weierstrass_restriction(p: Poly) -> Poly:
    wt = VarTable(("a", "b"))
    vals = weierstrass(Poly.var(wt, "a"), Poly.var(wt, "b"))
    return p.substitute(dict(zip(CUBIC_NAMES, vals)), wt)


@lru_cache(maxsize=None)
def aronhold_polys() -> tuple[Poly, Poly]:
    """Degree 4 and 6 invariants scaled to give ``a`` and ``b`` on Weierstrass forms."""
    out = []
    for d, name in ((4, "a"), (6, "b")):
        inv = invariant_kernel(d).invariant
        r = _weierstrass_restriction(inv)
        target = Poly.var(r.table, name)
        # the restriction must be a nonzero multiple of the target coordinate
        if len(r) != 1 or next(iter(r.terms)) != next(iter(target.terms)):
            raise InvariantError(f"degree {d} invariant restricts to {r}, not a multiple of {name}")
        out.append(inv.scale(Fraction(1) / r.leading()[1]))
    return out[0], out[1]


def evaluate(p: Poly, values):
    """Evaluate at coefficient values that may be numbers or polynomials."""
    values = list(values)
    if all(isinstance(v, (int, Fraction)) for v in values):
        return p(values)
    table = next(v.table for v in values if isinstance(v, Poly))
    vals = [v if isinstance(v, Poly) else Poly.const(table, v) for v in values]
    return p.substitute(dict(zip(p.table.names, vals)), table)


def aronhold(cubic) -> tuple:
    """``(a, b)`` of a ternary cubic given by 10 coefficients."""
    A, B = aronhold_polys()
    return evaluate(A, cubic), evaluate(B, cubic)


def discriminant(cubic):
    """``4 a^3 + 27 b^2``."""
    a, b = aronhold(cubic)
    return 4 * a ** 3 + 27 * b ** 2
