"""Triple wedges of quadratic monomials, the sl3 operators on them, the
ten-dimensional generator columns and the quadratic invariant ``I2``.

Wedge vectors are dicts ``{(i, j, k): coef}`` with ``0 <= i < j < k < 6``
indexing ``(x^2, xy, xz, y^2, yz, z^2)``.  A vector can be read in one of
two bases: the monomial basis (``x^2 ^ xy ^ xz`` literally) or the
``t``-basis of the scaled monomials ``t = (x^2, 2xy, 2xz, y^2, 2yz, z^2)``.
``monomial_to_t`` does the conversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..exactalg import Poly, VarTable
from ..orbitdata import QUAD_MONOMIALS
from .nets import TRIPLES, generic_net, net_table, plucker, triple_label

MONO_NAMES = ("xx", "xy", "xz", "yy", "yz", "zz")
_SCALE = (1, Fraction(1, 2), Fraction(1, 2), 1, Fraction(1, 2), 1)  # monomial -> t


def _sort_sign(idx):
    """Sorted tuple and permutation sign, or (None, 0) on a repeat."""
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return None, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


def wedge_from_terms(terms) -> dict:
    """``[(coef, "xx", "xy", "xz"), ...]`` -> monomial-basis wedge vector."""
    out: dict = {}
    for coef, *names in terms:
        key, s = _sort_sign(MONO_NAMES.index(n) for n in names)
        if key is None:
            continue
        out[key] = out.get(key, 0) + s * Fraction(coef)
    return {k: v for k, v in out.items() if v}


def add(a: dict, b: dict, cb=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + cb * v
    return {k: v for k, v in out.items() if v}


def scale(a: dict, c) -> dict:
    return {k: v * c for k, v in a.items() if v * c}


def monomial_to_t(w: dict) -> dict:
    out = {}
    for (i, j, k), v in w.items():
        out[(i, j, k)] = v * _SCALE[i] * _SCALE[j] * _SCALE[k]
    return out


def wedge_str(w: dict, basis: str = "m") -> str:
    """Monomial-basis wedge vector ``w`` printed in the monomial (``"m"``) or t-basis."""
    if basis == "t":
        w = {k: v for k, v in monomial_to_t(w).items() if v}
    if not w:
        return "0"
    parts = []
    for key in sorted(w):
        v = w[key]
        if basis == "t":
            label = "t" + triple_label(key)
        else:
            label = "^".join(MONO_NAMES[i] for i in key)
        a = abs(v)
        body = label if a == 1 else f"{a}*{label}"
        parts.append(("-" if v < 0 else "+") + body)
    s = " ".join(p[0] + " " + p[1:] for p in parts)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


# ---------------------------------------------------------------------------
# sl3 operators


def _apply_on_monomial(i: int, j: int, m: int) -> list:
    """``x_i d/dx_j`` on quadratic monomial ``m``: list of (coef, monomial)."""
    e = list(QUAD_MONOMIALS[m])
    if e[j] == 0:
        return []
    c = e[j]
    e[j] -= 1
    e[i] += 1
    return [(c, QUAD_MONOMIALS.index(tuple(e)))]


def lie_act(i: int, j: int, w: dict) -> dict:
    """``E_ij`` (0-based; replaces the j-th variable by the i-th) on a
    monomial-basis wedge vector, by the Leibniz rule."""
    if i == j:
        raise ValueError("only off-diagonal operators are used")
    out: dict = {}
    for key, v in w.items():
        for pos in range(3):
            for c, m in _apply_on_monomial(i, j, key[pos]):
                idx = list(key)
                idx[pos] = m
                k2, s = _sort_sign(idx)
                if k2 is None:
                    continue
                out[k2] = out.get(k2, 0) + s * c * v
    return {k: v for k, v in out.items() if v}


def E(a: int, b: int, w: dict) -> dict:
    """1-based ``E_ab`` as printed."""
    return lie_act(a - 1, b - 1, w)


# ---------------------------------------------------------------------------
# generator columns


PRINTED_W = {
    1: [(1, "xx", "xy", "xz")],
    2: [(-1, "xx", "xz", "yy"), (1, "xx", "xy", "yz")],
    3: [(1, "xx", "yz", "xz"), (1, "xx", "xy", "zz")],
    4: [(2, "xy", "yy", "xz"), (2, "xx", "yy", "yz")],
    5: [(1, "xx", "yy", "zz"), (2, "xz", "xy", "yz")],
    6: [(2, "xx", "yz", "zz"), (2, "xz", "xy", "zz")],
    7: [(6, "xy", "yy", "yz")],
    8: [(2, "xy", "yy", "zz"), (2, "xz", "yy", "yz")],
    9: [(2, "xy", "yz", "zz"), (2, "xz", "yy", "zz")],
    10: [(6, "xz", "yz", "zz")],
}

PRINTED_W_DUAL = {
    10: [(1, "xx", "xy", "yy")],
    9: [(-1, "xx", "xz", "yy"), (-2, "xx", "xy", "yz")],
    8: [(2, "xx", "xz", "yz"), (1, "xx", "xy", "zz")],
    7: [(-1, "xx", "xz", "zz")],
    6: [(2, "xy", "xz", "yy"), (1, "xx", "yy", "yz")],
    5: [(-4, "xy", "xz", "yz"), (-1, "xx", "yy", "zz")],
    4: [(2, "xy", "xz", "zz"), (1, "xx", "yz", "zz")],
    3: [(2, "xy", "yy", "zz"), (-4, "xz", "yy", "yz")],
    2: [(2, "xz", "yy", "zz"), (-4, "xy", "yz", "zz")],
    1: [(6, "yy", "yz", "zz")],
}

# (target, source, operator (a, b), scalar): w_target = scalar * E_ab w_source
W_RECURSION = (
    (2, 1, (2, 1), 1), (3, 1, (3, 1), 1), (4, 2, (2, 1), 1), (5, 2, (3, 1), 1),
    (6, 3, (3, 1), 1), (7, 4, (2, 1), 1), (8, 4, (3, 1), 1), (9, 5, (3, 1), 1),
    (10, 6, (3, 1), 1),
)
# the extra E_32 relations inside the w column
W_EXTRA = ((8, 7, (3, 2), Fraction(1, 3)), (9, 8, (3, 2), Fraction(1, 2)), (10, 9, (3, 2), 1))
W_DUAL_RECURSION = (
    (9, 10, (3, 2), -1), (8, 9, (3, 2), Fraction(-1, 2)), (7, 8, (3, 2), Fraction(-1, 3)),
    (6, 10, (3, 1), -1), (5, 9, (3, 1), -1), (4, 7, (2, 1), -1), (3, 6, (3, 1), -1),
    (2, 4, (2, 1), -1), (1, 2, (2, 1), -1),
)


@dataclass
class GeneratorCheck:
    label: str
    recursion: dict
    printed: dict

    @property
    def ok(self) -> bool:
        return self.recursion == self.printed


class TableMismatch(AssertionError):
    pass


@lru_cache(maxsize=None)
def _generators():
    w = {1: wedge_from_terms(PRINTED_W[1])}
    for tgt, src, (a, b), c in W_RECURSION:
        w[tgt] = scale(E(a, b, w[src]), c)
    ws = {10: wedge_from_terms(PRINTED_W_DUAL[10])}
    for tgt, src, (a, b), c in W_DUAL_RECURSION:
        ws[tgt] = scale(E(a, b, ws[src]), c)
    return w, ws


def generator_checks() -> list[GeneratorCheck]:
    """Every recursion step compared with the printed closed form."""
    w, ws = _generators()
    out = []
    for i in range(1, 11):
        out.append(GeneratorCheck(f"w{i}", w[i], wedge_from_terms(PRINTED_W[i])))
    for tgt, src, (a, b), c in W_EXTRA:
        out.append(GeneratorCheck(f"w{tgt} = {c}*E{a}{b} w{src}", scale(E(a, b, w[src]), c), w[tgt]))
    for i in range(1, 11):
        out.append(GeneratorCheck(f"w{i}*", ws[i], wedge_from_terms(PRINTED_W_DUAL[i])))
    return out


def wedge_generators(check: bool = True):
    """``(w, w_dual)``: dicts index -> monomial-basis wedge vectors.

    Built from ``w1`` and ``w10*`` by the operator recursions; with ``check``
    every entry is compared with the printed closed form.
    """
    if check:
        bad = [c.label for c in generator_checks() if not c.ok]
        if bad:
            raise TableMismatch("recursion disagrees with printed generators: " + ", ".join(bad))
    w, ws = _generators()
    return dict(w), dict(ws)


# ---------------------------------------------------------------------------
# the quadratic invariant


@lru_cache(maxsize=None)
def t_table() -> VarTable:
    return VarTable(tuple("t" + triple_label(t) for t in TRIPLES))


def t_linear(w: dict) -> Poly:
    """Monomial-basis wedge vector read as a linear form in the ``t_ijk``."""
    tt = t_table()
    return Poly.linear(tt, {"t" + triple_label(k): v for k, v in monomial_to_t(w).items()})


# coef, triple, triple (1-based labels), for -8*I2
PRINTED_I2_TERMS = (
    (1, "235", "235"), (-8, "146", "146"),
    (-8, "134", "346"), (8, "126", "246"), (8, "145", "156"),
    (6, "123", "456"), (-6, "136", "245"), (6, "124", "356"),
    (-4, "125", "256"), (4, "135", "345"), (-4, "234", "236"),
    (2, "134", "256"), (-2, "125", "346"), (2, "135", "246"), (-2, "126", "345"),
    (2, "145", "236"), (2, "156", "234"), (-2, "146", "235"),
)

# -8*theta in the net minors u_ijk
PRINTED_THETA = (
    (1, "235", "235"), (-8, "146", "146"),
    (4, "146", "235"), (4, "135", "345"), (-4, "125", "256"), (-4, "234", "236"),
    (8, "145", "156"), (-8, "134", "346"), (8, "126", "246"),
    (8, "123", "456"), (-8, "136", "245"), (8, "124", "356"),
)


def _quadratic(terms, table: VarTable, prefix: str) -> Poly:
    out = Poly.zero(table)
    for c, a, b in terms:
        out = out + Poly.var(table, prefix + a) * Poly.var(table, prefix + b) * c
    return out


def I2_printed() -> Poly:
    """``I2`` from the printed 18-term formula."""
    return _quadratic(PRINTED_I2_TERMS, t_table(), "t").scale(Fraction(-1, 8))


def I2_from_generators() -> Poly:
    """``I2 = -sum_i w_i w_i*`` with both factors read in the ``t`` coordinates."""
    w, ws = wedge_generators()
    out = Poly.zero(t_table())
    for i in range(1, 11):
        out = out - t_linear(w[i]) * t_linear(ws[i])
    return out


@lru_cache(maxsize=None)
def I2_poly() -> Poly:
    a, b = I2_printed(), I2_from_generators()
    if a != b:
        raise TableMismatch("printed quadratic invariant differs from the generator construction")
    return a


def I2(coords: dict):
    """Evaluate ``I2`` on ``t``-coordinates keyed by 0-based triples (ring-generic)."""
    p = I2_poly()
    names = p.table.names
    total = 0
    for e, c in p.terms.items():
        term = c
        for n, k in zip(names, e):
            if k:
                key = tuple(int(ch) - 1 for ch in n[1:])
                term = term * coords[key] ** k
        total = total + term
    return total


def theta_printed_poly() -> Poly:
    """Salmon's ``theta`` in the 18 net coordinates, from the printed ``-8 theta``."""
    minors = plucker(generic_net())
    out = Poly.zero(net_table())
    for c, a, b in PRINTED_THETA:
        ka = tuple(int(ch) - 1 for ch in a)
        kb = tuple(int(ch) - 1 for ch in b)
        out = out + minors[ka] * minors[kb] * c
    return out.scale(Fraction(-1, 8))


def span_rank(vectors) -> int:
    """Rank of a list of wedge vectors (exact)."""
    from ..exactalg import solve_linear

    keys = sorted(set().union(*vectors)) if vectors else []
    if not keys:
        return 0
    rows = [[v.get(k, 0) for v in vectors] for k in keys]
    return len(vectors) - solve_linear(rows, None, len(vectors)).dimension


__all__ = [
    "wedge_from_terms", "lie_act", "E", "wedge_generators", "generator_checks",
    "I2_poly", "I2_printed", "I2_from_generators", "I2", "t_linear", "monomial_to_t",
    "theta_printed_poly",
]
