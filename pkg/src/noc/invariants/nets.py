"""Nets of conics as 3x6 coefficient matrices, and the maps built on them.

A net is stored as three quadrics, each a coefficient vector over
``(x^2, xy, xz, y^2, yz, z^2)``.  The functions here only use ring
operations on the entries, so they work equally for rational nets and for
nets whose entries are polynomials (the symbolic slice, or the 18 generic
coordinates).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Sequence

from ..exactalg import Poly, VarTable, format_rational, parse_rational
from ..orbitdata import QUAD_MONOMIALS, parse_quadric, quadric_str

TRIPLES = tuple(combinations(range(6), 3))  # 0-based column triples, lex order

CUBIC_MONOMIALS = ((3, 0, 0), (2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 1, 1),
                   (1, 0, 2), (0, 3, 0), (0, 2, 1), (0, 1, 2), (0, 0, 3))


def triple_label(t: Sequence[int]) -> str:
    return "".join(str(i + 1) for i in t)


@dataclass(frozen=True)
class Net:
    quadrics: tuple

    def __post_init__(self):
        if len(self.quadrics) != 3 or any(len(q) != 6 for q in self.quadrics):
            raise ValueError("a net is three quadrics with six coefficients each")

    @classmethod
    def of(cls, rows) -> "Net":
        out = []
        for r in rows:
            if isinstance(r, str):
                out.append(parse_quadric(r))
            else:
                out.append(tuple(parse_rational(c) for c in r))
        return cls(tuple(out))

    @property
    def rows(self):
        return self.quadrics

    def to_json(self) -> dict:
        return {"quadrics": [[format_rational(c) for c in q] for q in self.quadrics]}

    @classmethod
    def from_json(cls, data) -> "Net":
        return cls.of(data["quadrics"])

    @classmethod
    def load(cls, path) -> "Net":
        return cls.from_json(json.loads(Path(path).read_text()))

    def __str__(self):
        return "(" + ", ".join(quadric_str(q) for q in self.quadrics) + ")"


def _rows(n):
    return n.quadrics if isinstance(n, Net) else n


@lru_cache(maxsize=None)
def slice_table() -> VarTable:
    return VarTable(("c", "g"))


def nu(c=None, g=None):
    """The slice net ``(y^2 + 2xz, 2yz, -x^2 + 2g(xz - y^2) + cz^2)``.

    With no arguments the entries are polynomials in ``c, g``.
    """
    if c is None and g is None:
        t = slice_table()
        c, g = Poly.var(t, "c"), Poly.var(t, "g")
        zero, one = Poly.zero(t), Poly.const(t, 1)
    else:
        c, g = Fraction(c), Fraction(g)
        zero, one = Fraction(0), Fraction(1)
    return (
        (zero, zero, 2 * one, one, zero, zero),
        (zero, zero, zero, zero, 2 * one, zero),
        (-one, zero, 2 * g, -2 * g, zero, c),
    )


def nu_net(c, g) -> Net:
    return Net(nu(c, g))


@lru_cache(maxsize=None)
def net_table() -> VarTable:
    """18 generic net coordinates ``n{r}_{monomial}``, r = 1..3."""
    names = []
    for r in range(1, 4):
        for e in QUAD_MONOMIALS:
            names.append(f"n{r}_" + "x" * e[0] + "y" * e[1] + "z" * e[2])
    return VarTable(tuple(names))


def generic_net():
    t = net_table()
    return tuple(tuple(Poly.var(t, t.names[6 * r + k]) for k in range(6)) for r in range(3))


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def plucker(n) -> dict:
    """Minors of the 3x6 matrix, keyed by 0-based column triples.

    These are the ``t_ijk`` coordinates of the wedge of the three quadrics.
    """
    rows = _rows(n)
    return {t: det3([[rows[r][c] for c in t] for r in range(3)]) for t in TRIPLES}


def corank(n) -> int:
    rows = [list(map(Fraction, r)) for r in _rows(n)]
    rank = 0
    cols = 6
    for c in range(cols):
        piv = next((r for r in range(rank, 3) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(3):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return 3 - rank


def symmetric_matrix(q):
    """Symmetric 3x3 matrix of a quadric (off-diagonal entries halved)."""
    xx, xy, xz, yy, yz, zz = q
    h = Fraction(1, 2)
    return ((xx, xy * h, xz * h), (xy * h, yy, yz * h), (xz * h, yz * h, zz))


@lru_cache(maxsize=None)
def _pencil_table() -> VarTable:
    return VarTable(("x", "y", "z"))


def cubic_coefficients(poly: Poly) -> tuple:
    """Coefficients of a ternary cubic over ``x, y, z`` in ``CUBIC_MONOMIALS`` order."""
    return tuple(poly.coeff(e) for e in CUBIC_MONOMIALS)


def det_map(n) -> tuple:
    """``det(l1*M1 + l2*M2 + l3*M3)`` as 10 cubic coefficients in ``(l1, l2, l3)``.

    Entries of the result have the same type as the net entries.  The pencil
    variables are ordered like ``x, y, z`` in ``CUBIC_MONOMIALS``.
    """
    rows = _rows(n)
    mats = [symmetric_matrix(q) for q in rows]
    # expand the determinant by multilinearity in the three columns
    coeffs = {e: None for e in CUBIC_MONOMIALS}
    for a in range(3):
        for b in range(3):
            for c in range(3):
                m = [[mats[a][i][0], mats[b][i][1], mats[c][i][2]] for i in range(3)]
                d = det3(m)
                e = [0, 0, 0]
                e[a] += 1
                e[b] += 1
                e[c] += 1
                e = tuple(e)
                coeffs[e] = d if coeffs[e] is None else coeffs[e] + d
    return tuple(coeffs[e] for e in CUBIC_MONOMIALS)


def flip_xy(cubic: Sequence) -> tuple:
    """Substitute ``(x, y, z) -> (-x, -y, z)`` in a cubic coefficient vector."""
    return tuple(c if (e[0] + e[1]) % 2 == 0 else -c for c, e in zip(cubic, CUBIC_MONOMIALS))


def jacobian(n) -> tuple:
    """The Jacobian covariant ``det(d M_j / d xi_i)`` as cubic coefficients."""
    t = _pencil_table()
    quads = []
    for q in _rows(n):
        p = Poly.zero(t)
        for c, e in zip(q, QUAD_MONOMIALS):
            if c:
                p = p + Poly.monomial(t, e, c)
        quads.append(p)
    mat = [[quads[j].diff(v) for j in range(3)] for v in t.names]
    return cubic_coefficients(det3(mat))
