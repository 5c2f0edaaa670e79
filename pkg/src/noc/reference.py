"""Tabulated values the computations are checked against.

Everything here is transcribed data, kept as strings in the same notation
the CLI prints.  Nothing in this module is computed.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exactalg import Poly, parse_poly
from .orbitdata import CHERN
from .symfun import SchurCombo

ORBIT_CLASSES = {
    "C": "8*(v1 - 2*u1)^2",
    "D": "-3*u2 + 3*v2 - 16*u1*v1 + 3*v1^2 + 17*u1^2",
    "D*": "12*u2 - 3*v2 - 20*u1*v1 + 6*v1^2 + 16*u1^2",
    "E": "3*u3 + 3*v3 - 3*u1*u2 + u2*v1 - 6*u1*v1^2 + 13*u1^2*v1 - 2*u1*v2 - 8*u1^3 + v1^3",
    "E*": ("-24*u3 + 3*v3 - 24*u1*u2 + 16*u2*v1 - 16*u1*v1^2 + 20*u1^2*v1 - 6*v1*v2"
           " + 10*u1*v2 - 8*u1^3 + 4*v1^3"),
    "F": "2*(v1 - 2*u1)*(6*u1^2 - 4*u1*v1 - 6*u2 + 3*v2)",
    "F*": "2*(v1 - 2*u1)*(5*u1^2 - 8*u1*v1 + 9*u2 - 3*v2 + 3*v1^2)",
}

AMU_CLASSES = {"finite": "4*(v1 - 2*u1)", "infinity": "2*(v1 - 2*u1)"}

DEGREES = {"C": 72, "D": 36, "D*": 45, "A_mu": 12, "A_inf": 6}

THOM_P4_FINITE = ("8*D[544111] + 4*D[444211] + 16*D[844] + 20*D[6442] + 32*D[64411] + 120*D[6541]"
                  " + 160*D[655] + 16*D[54421] + 32*D[55411] + 40*D[5542] + 80*D[5551] + 80*D[664]"
                  " + 40*D[7441] + 112*D[754]")
THOM_P3 = {
    "A_finite": "8*D[433] + 4*D[3331]",
    "D": "3*D[33311] + 6*D[3332] + 14*D[443] + 16*D[4331] + 17*D[533]",
    "E": ("D[333111] + 2*D[33321] + 4*D[3333] + 6*D[43311] + 8*D[4332] + 14*D[4431]"
          " + 8*D[444] + 13*D[5331] + 19*D[543] + 8*D[633]"),
}

# wedge of the slice net in the monomial basis e_ijk (1-based over xx, xy, xz, yy, yz, zz)
PSI_SLICE = {"345": "12*g", "456": "2*c", "356": "4*c", "145": "-2", "135": "-4"}

# the determinant cubic of the slice net, after (x, y, z) -> (-x, -y, z)
WEIERSTRASS_SLICE = "y^2*z + x^3 + (c - 3*g^2)*x*z^2 + 2*g*(c + g^2)*z^3"

J6_SLICE = "24*g"
K_SLICE = ("12*g^2", "3*g^2 - c")

# (J6, J12, k) for the semistable orbits of codimension > 1
STABILITY = {
    "D": (1, 1, 1),
    "D*": (-8, 16, 4),
    "E": (1, 1, 1),
    "E*": (-8, 16, 4),
}
K_B = {"B": ((-9, 1), 1), "B*": ((0, 1), 4)}

INCIDENCE_EXAMPLE = {"F": "0", "F*": "-6*(2*alpha - beta)*(4*alpha^2 - 4*alpha*beta + beta^2)"}

UNSTABLE_NOT_POSITIVE = ("D", "D*", "E", "E*")


def chern_poly(text: str) -> Poly:
    return parse_poly(text, CHERN)


@lru_cache(maxsize=None)
def printed_class(name: str) -> Poly:
    return chern_poly(ORBIT_CLASSES[name])


def printed_schur(text: str) -> SchurCombo:
    return SchurCombo.parse(text)


def printed_thom_p4_infinity() -> SchurCombo:
    return printed_schur(THOM_P4_FINITE).scale(Fraction(1, 2))


