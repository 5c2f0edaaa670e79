"""Invariant theory of nets of conics: Plücker coordinates, the generator
columns and ``I2``, cubic invariants, ``J6``/``J12``, stability and the two
projections onto cubics."""

from .cubics import aronhold, aronhold_polys, discriminant, invariant_kernel, weierstrass
from .nets import (
    CUBIC_MONOMIALS,
    Net,
    corank,
    det_map,
    flip_xy,
    generic_net,
    jacobian,
    nu,
    nu_net,
    plucker,
)
from .projections import dual_image_report, jacobian_factorisation, pi1, pi2, span_checks
from .semi import (
    J6,
    J12,
    J6_poly,
    J12_poly,
    discriminant_check,
    invariance_check,
    orbit_net,
    semistable_table,
    slice_values,
    stability,
    theta_check,
)
from .wedge import E, I2, I2_from_generators, I2_poly, I2_printed, generator_checks, lie_act, wedge_generators

__all__ = [
    "CUBIC_MONOMIALS", "Net", "corank", "det_map", "flip_xy", "generic_net", "jacobian", "nu",
    "nu_net", "plucker", "aronhold", "aronhold_polys", "discriminant", "invariant_kernel",
    "weierstrass", "dual_image_report", "jacobian_factorisation", "pi1", "pi2", "span_checks",
    "J6", "J12", "J6_poly", "J12_poly", "discriminant_check", "invariance_check", "orbit_net",
    "semistable_table", "slice_values", "stability", "theta_check", "E", "I2",
    "I2_from_generators", "I2_poly", "I2_printed", "generator_checks", "lie_act",
    "wedge_generators",
]
