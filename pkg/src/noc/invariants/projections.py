"""The two linear projections of the Plücker space onto cubics.

``pi1`` sends ``e_ijk`` to the ``(i, j, k)`` minor of the matrix of partial
derivatives of the six quadratic monomials; it turns the Plücker image of a
net into its Jacobian.  ``pi2`` uses the matrix obtained by eliminating the
third variable on a line; one column carries a ``1/z`` that cancels in every
minor.  Both dual maps are compared with the generator columns.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..exactalg import Poly
from .nets import CUBIC_MONOMIALS, TRIPLES, _pencil_table, cubic_coefficients, det3, jacobian, plucker
from .wedge import W_RECURSION, monomial_to_t, scale, wedge_generators


class ProjectionError(ArithmeticError):
    pass


def _vars():
    t = _pencil_table()
    return t, [Poly.var(t, n) for n in t.names]


@lru_cache(maxsize=None)
def pi1_images() -> dict:
    """``e_ijk -> cubic coefficients`` for the Jacobi projection."""
    t, (x, y, z) = _vars()
    zero = Poly.zero(t)
    mat = [
        [2 * x, y, z, zero, zero, zero],
        [zero, x, zero, 2 * y, z, zero],
        [zero, zero, x, zero, y, 2 * z],
    ]
    return {T: cubic_coefficients(det3([[mat[r][c] for c in T] for r in range(3)])) for T in TRIPLES}


@lru_cache(maxsize=None)
def pi2_images() -> dict:
    """``e_ijk -> cubic coefficients`` for the dual Jacobi projection.

    The last column is stored multiplied by ``z``; minors using it are
    divided by ``z`` exactly (an inexact division is an error).
    """
    t, (x, y, z) = _vars()
    zero = Poly.zero(t)
    mat = [
        [z, zero, -x, zero, zero, x * x],
        [zero, zero, zero, z, -y, y * y],
        [zero, z, -y, zero, -x, 2 * x * y],
    ]
    out = {}
    for T in TRIPLES:
        m = det3([[mat[r][c] for c in T] for r in range(3)])
        if 5 in T:
            q = m.divide_exact(z)
            if q is None:
                raise ProjectionError(f"minor {T} is not a cubic polynomial")
            m = q
        out[T] = cubic_coefficients(m)
    return out


def apply(images: dict, coords: dict) -> tuple:
    """Image of a wedge vector given by ``e``-coordinates."""
    out = [0] * 10
    for T, v in coords.items():
        if v:
            for k, c in enumerate(images[T]):
                out[k] = out[k] + v * c
    return tuple(out)


def pi1(coords: dict) -> tuple:
    return apply(pi1_images(), coords)


def pi2(coords: dict) -> tuple:
    return apply(pi2_images(), coords)


def _multinomial(e) -> int:
    return factorial(3) // (factorial(e[0]) * factorial(e[1]) * factorial(e[2]))


def pi1_dual() -> list[dict]:
    """``pi1^*`` of the basis dual to the cubic monomials, in ``t`` coordinates."""
    imgs = pi1_images()
    return [{T: imgs[T][m] for T in TRIPLES if imgs[T][m]} for m in range(10)]


def pi2_dual() -> list[dict]:
    """``pi2^*`` of the monomial basis of the dual space.

    A monomial pairs with the matching cubic monomial with value
    ``1 / multinomial`` (so it is dual to ``x^3, 3x^2y, ..., 6xyz, ...``).
    """
    imgs = pi2_images()
    out = []
    for m, e in enumerate(CUBIC_MONOMIALS):
        f = Fraction(1, _multinomial(e))
        out.append({T: imgs[T][m] * f for T in TRIPLES if imgs[T][m]})
    return out


def chain_basis() -> list[Fraction]:
    """Coefficients ``c_i`` of ``x^3`` and its images under the operator
    chain that builds the ``w`` column (``c_i`` times the i-th monomial)."""
    t, _ = _vars()
    cur = {1: Poly.var(t, "x") ** 3}
    for tgt, src, (a, b), c in W_RECURSION:
        p = cur[src]
        cur[tgt] = (Poly.var(t, t.names[a - 1]) * p.diff(t.names[b - 1])).scale(c)
    return [Fraction(cur[i].coeff(CUBIC_MONOMIALS[i - 1])) for i in range(1, 11)]


def _ratio(found: dict, expected: dict):
    """``r`` with ``found = r * expected``, or None."""
    if not expected:
        return None
    k = next(iter(expected))
    r = Fraction(found.get(k, 0)) / expected[k]
    return r if {kk: v * r for kk, v in expected.items()} == found else None


@dataclass
class DualImageRow:
    label: str
    ratio: Fraction | None  # image of the monomial-dual basis vector / printed target
    literal_ok: bool  # basis dual to the monomials (x^3, 3x^2y, ..., z^3)
    chain_ok: bool  # basis built from x^3 by the same operators as the w column


def dual_image_report() -> list[DualImageRow]:
    """``pi1^*`` against ``8 w_i`` and ``pi2^*`` against ``-1/3 w_i*``.

    Two readings of the cubic basis are checked.  The literal one pairs
    each monomial with its dual.  The chain one uses ``x^3`` and its images
    under the operators of the ``w`` recursion (on the other side, the dual
    of that basis).  Equivariance makes the chain reading consistent with
    the ``w`` normalisation.
    """
    w, ws = wedge_generators()
    chain = chain_basis()
    mult = [Fraction(_multinomial(e)) for e in CUBIC_MONOMIALS]
    rows = []
    for name, images, targets, c in (
        ("pi1* -> 8 w{}", pi1_dual(), w, 8),
        ("pi2* -> -1/3 w{}*", pi2_dual(), ws, Fraction(-1, 3)),
    ):
        for i in range(1, 11):
            expected = monomial_to_t(scale(targets[i], c))
            found = images[i - 1]
            r = _ratio(found, expected)
            if name.startswith("pi1"):
                chain_factor = chain[i - 1] / mult[i - 1]
            else:
                chain_factor = mult[i - 1] / chain[i - 1]
            rows.append(DualImageRow(name.format(i), r, r == 1, r is not None and r * chain_factor == 1))
    return rows


def dual_image_checks() -> list[tuple[str, bool]]:
    """Literal reading only: ``[(label, ok)]``."""
    return [(r.label, r.literal_ok) for r in dual_image_report()]


def span_checks() -> dict:
    """Ranks of the two image families and of their union (10, 10, 20 expected)."""
    from .wedge import span_rank

    a, b = pi1_dual(), pi2_dual()
    w, ws = wedge_generators()
    tw = [monomial_to_t(w[i]) for i in range(1, 11)]
    tws = [monomial_to_t(ws[i]) for i in range(1, 11)]
    return {
        "pi1*": span_rank(a), "pi2*": span_rank(b), "union": span_rank(a + b),
        "pi1* in span w": span_rank(a + tw) == 10, "pi2* in span w*": span_rank(b + tws) == 10,
    }
def jacobian_factorisation(n) -> bool:
    """``Jac(n) = pi1(psi(n))``."""
    return tuple(jacobian(n)) == tuple(pi1(plucker(n)))
