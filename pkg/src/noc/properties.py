"""Seeded property checks used by ``noc verify-all``.

The test suite runs the same properties through hypothesis; these are the
fixed-seed versions that can run inside the CLI without test dependencies.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactalg import Poly, VarTable
from .symfun import RootContext, SchurCombo, combo_to_poly, hook_partitions, schur_expand

_RING = VarTable(("x", "y", "z"))


def random_poly(rng: random.Random, table: VarTable = _RING, terms: int = 4, max_exp: int = 3) -> Poly:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, max_exp) for _ in table.names)
        out[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return Poly(table, out)


def ring_axioms(seed: int = 7, trials: int = 40) -> tuple[bool, str]:
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        a, b, c = (random_poly(rng) for _ in range(3))
        ok = (a + b == b + a and a * b == b * a and (a + b) + c == a + (b + c)
              and (a * b) * c == a * (b * c) and a * (b + c) == a * b + a * c
              and a - a == Poly.zero(_RING) and a * 1 == a)
        # exact division undoes multiplication
        if not b.is_zero():
            ok = ok and (a * b).divide_exact(b) == a
        bad += not ok
    return bad == 0, f"{trials - bad}/{trials} random triples satisfy the ring axioms"


def substitution_composition(seed: int = 11, trials: int = 20) -> tuple[bool, str]:
    """``(p o g) o h == p o (g o h)`` for polynomial maps."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(trials):
        p = random_poly(rng, max_exp=2)
        g = {n: random_poly(rng, terms=2, max_exp=1) for n in _RING.names}
        h = {n: random_poly(rng, terms=2, max_exp=1) for n in _RING.names}
        lhs = p.substitute(g, _RING).substitute(h, _RING)
        gh = {n: q.substitute(h, _RING) for n, q in g.items()}
        bad += lhs != p.substitute(gh, _RING)
    return bad == 0, f"{trials - bad}/{trials} compositions agree"


def schur_roundtrip(seed: int = 13, trials: int = 6, p: int = 3) -> tuple[bool, str]:
    """Random Schur combinations survive ``combo_to_poly`` then ``schur_expand``."""
    rng = random.Random(seed)
    ctx = RootContext(3, p)
    bad = 0
    for _ in range(trials):
        n = rng.randint(2, 7)
        cands = hook_partitions(n, 3, p)
        pick = rng.sample(cands, min(len(cands), rng.randint(1, 4)))
        combo = SchurCombo({lam: rng.randint(-20, 20) or 1 for lam in pick})
        back = schur_expand(combo_to_poly(combo, ctx), ctx, seed=rng.randint(0, 10 ** 6))
        bad += back != combo
    return bad == 0, f"{trials - bad}/{trials} random combinations round-trip"


def _swap(poly: Poly, a: str, b: str) -> Poly:
    t = poly.table
    images = {n: Poly.var(t, n) for n in t.names}
    images[a], images[b] = images[b], images[a]
    return poly.substitute(images, t)


def localization_symmetry(name: str = "D", p: int = 3) -> tuple[bool, str]:
    """The root form of a Thom polynomial is fixed by generating transpositions."""
    from .thom import tp_orbit

    roots = tp_orbit(name, p, expand=False).roots()
    ctx = RootContext(3, p)
    swaps = [("alpha1", "alpha2"), ("alpha2", "alpha3")]
    swaps += [(ctx.beta_names[j], ctx.beta_names[j + 1]) for j in range(p - 1)]
    bad = [f"{a}<->{b}" for a, b in swaps if _swap(roots, a, b) != roots]
    return not bad, ("invariant under " + ", ".join(f"{a}<->{b}" for a, b in swaps)) if not bad \
        else "not invariant under " + ", ".join(bad)


def localization_linearity(seed: int = 17, p: int = 3) -> tuple[bool, str]:
    from .orbitdata import CHERN
    from .resolver import class_Amu
    from .thom import localize

    rng = random.Random(seed)
    P = class_Amu("finite")
    Q = Poly.linear(CHERN, {"u1": rng.randint(-5, 5), "v1": rng.randint(-5, 5)})
    c = Fraction(rng.randint(1, 9), rng.randint(1, 5))
    lhs = localize(P.scale(c) + Q, p, expand=False).elementary
    rhs = localize(P, p, expand=False).elementary.scale(c) + localize(Q, p, expand=False).elementary
    zero = localize(Poly.zero(CHERN), p, expand=False).elementary.is_zero()
    return lhs == rhs and zero, f"localize({c}*[A] + Q) = {c}*localize([A]) + localize(Q), localize(0) = 0"


def graph_transitivity() -> tuple[bool, str]:
    from .hierarchy import build_hierarchy

    g = build_hierarchy()
    tv, cv = g.transitivity_violations(), g.codim_violations()
    return not tv and not cv, f"{len(g.edges)} edges, {len(tv)} transitivity and {len(cv)} codimension violations"


ALL = (
    ("ring axioms", ring_axioms),
    ("substitution composition", substitution_composition),
    ("schur round-trip", schur_roundtrip),
    ("localization symmetry", localization_symmetry),
    ("localization linearity", localization_linearity),
    ("graph transitivity", graph_transitivity),
)


def run_all() -> list[tuple[str, bool, str]]:
    return [(name, *fn()) for name, fn in ALL]
