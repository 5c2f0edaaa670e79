"""Partitions, elementary symmetric polynomials, quotient Chern classes and
Schur determinants, with conversion of symmetric polynomials to the Schur
basis.

Two coordinate systems are used for a pair of root sets
``alpha_1..alpha_m`` (source) and ``beta_1..beta_p`` (target):

* root coordinates: the roots themselves (weight 1 each);
* elementary coordinates: ``a_i = sigma_i(alpha)`` and ``b_k = sigma_k(beta)``
  with weights ``i`` and ``k``.

The elementary coordinates are algebraically independent, so monomial
matching there is legitimate and much cheaper than in root coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactalg import Coef, Poly, VarTable, format_rational, modular_unique_solve, parse_rational

__all__ = [
    "Partition",
    "partitions",
    "hook_partitions",
    "SchurCombo",
    "RootContext",
    "elem_sym",
    "symmetric_reduce",
    "quotient_chern",
    "schur",
    "schur_expand",
    "SchurExpansionError",
]

Partition = tuple  # weakly decreasing tuple of positive ints


def make_partition(parts: Iterable[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in parts if int(x) != 0)
    if any(x < 0 for x in lam):
        raise ValueError(f"negative part in {lam}")
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"parts must be weakly decreasing: {lam}")
    return lam


def partition_str(lam: Sequence[int]) -> str:
    """Compact label: concatenated digits, or ``(10,4)`` once a part reaches 10."""
    if any(x >= 10 for x in lam):
        return "(" + ",".join(str(x) for x in lam) + ")"
    return "".join(str(x) for x in lam)


def parse_partition(s: str) -> tuple[int, ...]:
    s = s.strip()
    if s.startswith("("):
        return make_partition(int(x) for x in s.strip("()").split(",") if x.strip())
    return make_partition(int(ch) for ch in s)


def partitions(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return out


def hook_partitions(n: int, m: int, p: int) -> list[tuple[int, ...]]:
    """Partitions of ``n`` with ``lambda_{p+1} <= m``."""
    return [lam for lam in partitions(n) if len(lam) <= p or lam[p] <= m]


# ---------------------------------------------------------------------------


class SchurCombo:
    """Finite rational combination of Schur determinants of one size."""

    def __init__(self, terms: Mapping[Sequence[int], Coef] | None = None):
        clean: dict[tuple[int, ...], Coef] = {}
        for lam, c in (terms or {}).items():
            lam = make_partition(lam)
            c = parse_rational(c)
            if c:
                clean[lam] = c
        sizes = {sum(lam) for lam in clean}
        if len(sizes) > 1:
            raise ValueError(f"inhomogeneous Schur combination: sizes {sorted(sizes)}")
        self.terms = clean

    @property
    def size(self) -> int | None:
        return sum(next(iter(self.terms))) if self.terms else None

    def __eq__(self, other):
        if isinstance(other, SchurCombo):
            return self.terms == other.terms
        return NotImplemented

    def __len__(self):
        return len(self.terms)

    def scale(self, c: Coef) -> "SchurCombo":
        return SchurCombo({lam: v * Fraction(c) for lam, v in self.terms.items()})

    def __add__(self, other: "SchurCombo") -> "SchurCombo":
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out.get(lam, 0) + c
        return SchurCombo(out)

    def sorted_items(self):
        # longest-first then reverse lex, so "544111" style labels lead
        return sorted(self.terms.items(), key=lambda kv: (-len(kv[0]), tuple(-x for x in kv[0])))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for i, (lam, c) in enumerate(self.sorted_items()):
            neg = c < 0
            a = -c if neg else c
            body = f"D[{partition_str(lam)}]" if a == 1 else f"{a}*D[{partition_str(lam)}]"
            if i == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    __repr__ = __str__

    def to_json(self) -> dict:
        return {"terms": [{"lambda": list(lam), "coef": format_rational(c)} for lam, c in self.sorted_items()]}

    @classmethod
    def from_json(cls, data) -> "SchurCombo":
        return cls({tuple(t["lambda"]): parse_rational(t["coef"]) for t in data["terms"]})

    @classmethod
    def parse(cls, text: str) -> "SchurCombo":
        """Parse ``"8*D[544111] + 4*D[444211]"``."""
        terms: dict = {}
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        i = 0
        sign = 1
        while i < len(text):
            if text[i] in "+-":
                sign = -1 if text[i] == "-" else 1
                i += 1
            j = text.index("D[", i)
            coef = text[i:j].rstrip("*")
            coef = Fraction(coef) if coef else Fraction(1)
            k = text.index("]", j)
            lam = parse_partition(text[j + 2:k])
            terms[lam] = terms.get(lam, 0) + sign * coef
            i = k + 1
            sign = 1
        return cls(terms)


@dataclass(frozen=True)
class RootContext:
    """Source roots ``alpha_1..alpha_m`` and target roots ``beta_1..beta_p``."""

    m: int = 3
    p: int = 3

    def __post_init__(self):
        if self.m < 1 or self.p < 1:
            raise ValueError("need at least one source and one target root")

    @property
    def alpha_names(self) -> tuple[str, ...]:
        return tuple(f"alpha{i}" for i in range(1, self.m + 1))

    @property
    def beta_names(self) -> tuple[str, ...]:
        return tuple(f"beta{j}" for j in range(1, self.p + 1))

    @property
    def a_names(self) -> tuple[str, ...]:
        return tuple(f"a{i}" for i in range(1, self.m + 1))

    @property
    def b_names(self) -> tuple[str, ...]:
        return tuple(f"b{j}" for j in range(1, self.p + 1))

    @property
    def roots(self) -> VarTable:
        return _root_table(self.m, self.p)

    @property
    def elementary(self) -> VarTable:
        return _elem_table(self.m, self.p)

    def elementary_images(self) -> dict[str, Poly]:
        """``a_i -> sigma_i(alpha)``, ``b_k -> sigma_k(beta)`` over the root table."""
        t = self.roots
        al = [Poly.var(t, n) for n in self.alpha_names]
        be = [Poly.var(t, n) for n in self.beta_names]
        out = {}
        for i, n in enumerate(self.a_names, 1):
            out[n] = elem_sym(i, al)
        for k, n in enumerate(self.b_names, 1):
            out[n] = elem_sym(k, be)
        return out

    def to_roots(self, poly: Poly) -> Poly:
        """Rewrite an elementary-coordinate polynomial in the roots."""
        return poly.substitute(self.elementary_images(), self.roots)


@lru_cache(maxsize=None)
def _root_table(m: int, p: int) -> VarTable:
    return VarTable(tuple(f"alpha{i}" for i in range(1, m + 1)) + tuple(f"beta{j}" for j in range(1, p + 1)))


@lru_cache(maxsize=None)
def _elem_table(m: int, p: int) -> VarTable:
    names = tuple(f"a{i}" for i in range(1, m + 1)) + tuple(f"b{j}" for j in range(1, p + 1))
    weights = tuple(range(1, m + 1)) + tuple(range(1, p + 1))
    return VarTable(names, weights)


def elem_sym(i: int, vals: Sequence[Poly]) -> Poly:
    """i-th elementary symmetric polynomial of ``vals``."""
    vals = list(vals)
    if not 0 <= i <= len(vals):
        raise ValueError(f"sigma_{i} undefined for {len(vals)} values")
    if not vals:
        raise ValueError("elem_sym needs at least one value to know the table")
    table = vals[0].table
    # coefficients of prod (1 + v t)
    coeffs = [Poly.const(table, 1)]
    for v in vals:
        nxt = coeffs + [Poly.zero(table)]
        for k in range(len(coeffs), 0, -1):
            nxt[k] = nxt[k] + coeffs[k - 1] * v
        coeffs = nxt
    return coeffs[i]


# ---------------------------------------------------------------------------
# symmetric reduction


def _reduce_block(poly: Poly, elem_images: list[Poly]) -> dict[tuple[int, ...], Coef]:
    """Write a symmetric polynomial in k variables via elementary ones.

    Returns ``{exponents of (e_1..e_k): coefficient}``.  Raises if the
    input is not symmetric.
    """
    k = len(poly.table)
    rem = dict(poly.terms)
    out: dict[tuple[int, ...], Coef] = {}
    cache: dict[tuple[int, ...], Poly] = {}

    def elem_power(expo):
        q = cache.get(expo)
        if q is None:
            q = Poly.const(poly.table, 1)
            for e, img in zip(expo, elem_images):
                if e:
                    q = q * img ** e
            cache[expo] = q
        return q

    while rem:
        lead = max(rem)
        c = rem[lead]
        if any(lead[i] < lead[i + 1] for i in range(k - 1)):
            raise ValueError("polynomial is not symmetric in the reduced variables")
        expo = tuple(lead[i] - (lead[i + 1] if i + 1 < k else 0) for i in range(k))
        out[expo] = out.get(expo, 0) + c
        for e, v in elem_power(expo).terms.items():
            nv = rem.get(e, 0) - c * v
            if nv:
                rem[e] = nv
            else:
                rem.pop(e, None)
    return out


def symmetric_reduce(poly: Poly, blocks: Sequence[tuple[Sequence[str], Sequence[str]]],
                     target: VarTable) -> Poly:
    """Replace symmetric blocks of variables by elementary symmetric ones.

    ``blocks`` is a list of ``(root names, elementary names)`` pairs.  Every
    variable of ``poly`` outside the blocks must also exist in ``target``.
    """
    current = poly
    for roots, elems in blocks:
        src = current.table
        ridx = [src.index(r) for r in roots]
        others = [i for i in range(len(src)) if i not in ridx]
        block_table = VarTable(tuple(roots))
        bvars = [Poly.var(block_table, r) for r in roots]
        images = [elem_sym(i, bvars) for i in range(1, len(roots) + 1)]
        # group by the exponents of the other variables
        groups: dict[tuple[int, ...], dict] = {}
        for e, c in current.terms.items():
            key = tuple(e[i] for i in others)
            groups.setdefault(key, {})[tuple(e[i] for i in ridx)] = c
        nxt_names = tuple(src.names[i] for i in others) + tuple(elems)
        nxt_weights = tuple(src.weights[i] for i in others) + tuple(range(1, len(elems) + 1))
        if target is not None and set(nxt_names) <= set(target.names):
            nxt_table = target
        else:
            nxt_table = VarTable(nxt_names, nxt_weights)
        pos = [nxt_table.index(n) for n in nxt_names]
        terms: dict = {}
        n = len(nxt_table)
        for key, sub in groups.items():
            reduced = _reduce_block(Poly(block_table, sub, _trusted=True), images)
            for ex, c in reduced.items():
                full = [0] * n
                for val, j in zip(key + ex, pos):
                    full[j] += val
                full = tuple(full)
                terms[full] = terms.get(full, 0) + c
        current = Poly(nxt_table, terms)
    if current.table != target:
        current = current.retable(target)
    return current


def to_elementary(poly: Poly, ctx: RootContext) -> Poly:
    """Root polynomial symmetric in alphas and in betas -> elementary coordinates."""
    blocks = []
    names = set(poly.table.names)
    if set(ctx.alpha_names) <= names:
        blocks.append((ctx.alpha_names, ctx.a_names))
    if set(ctx.beta_names) <= names:
        blocks.append((ctx.beta_names, ctx.b_names))
    return symmetric_reduce(poly, blocks, ctx.elementary)


# ---------------------------------------------------------------------------
# quotient Chern classes and Schur determinants


@lru_cache(maxsize=None)
def _quotient_chern_elem(m: int, p: int, i: int) -> Poly:
    """c_i in elementary coordinates."""
    t = _elem_table(m, p)
    if i < 0:
        return Poly.zero(t)
    b = [Poly.const(t, 1)] + [Poly.var(t, f"b{k}") for k in range(1, p + 1)]
    inv = _series_inverse_cached(m, p, i)
    total = Poly.zero(t)
    for k in range(0, min(i, p) + 1):
        total = total + b[k] * inv[i - k]
    return total


@lru_cache(maxsize=None)
def _series_inverse_cached(m: int, p: int, n: int) -> tuple:
    t = _elem_table(m, p)
    a = [Poly.var(t, f"a{k}") for k in range(1, m + 1)]
    s = [Poly.const(t, 1)]
    for k in range(1, n + 1):
        acc = Poly.zero(t)
        for j in range(1, min(k, m) + 1):
            acc = acc + a[j - 1] * s[k - j]
        s.append(-acc)
    return tuple(s)


def quotient_chern(ctx: RootContext, i: int, coords: str = "roots") -> Poly:
    """Degree-i part of prod(1+beta_j) / prod(1+alpha_i).

    ``coords`` selects root (default) or elementary coordinates.
    """
    c = _quotient_chern_elem(ctx.m, ctx.p, i)
    if coords == "elementary":
        return c
    if coords != "roots":
        raise ValueError(f"unknown coordinate system {coords!r}")
    return ctx.to_roots(c)


def poly_det(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant by Laplace expansion along rows, memoised on used columns."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix has no table; handle the 0x0 case at the caller")
    memo: dict[tuple[int, frozenset], Poly] = {}

    def rec(row: int, cols: frozenset) -> Poly:
        if row == n:
            return Poly.const(matrix[0][0].table, 1)
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = Poly.zero(matrix[0][0].table)
        free = [j for j in range(n) if j not in cols]
        for pos, j in enumerate(free):
            entry = matrix[row][j]
            if entry.is_zero():
                continue
            minor = rec(row + 1, cols | {j})
            if minor.is_zero():
                continue
            term = entry * minor
            total = total + term if pos % 2 == 0 else total - term
        memo[key] = total
        return total

    return rec(0, frozenset())


@lru_cache(maxsize=None)
def _schur_elem(m: int, p: int, lam: tuple[int, ...]) -> Poly:
    t = _elem_table(m, p)
    r = len(lam)
    if r == 0:
        return Poly.const(t, 1)
    matrix = [[_quotient_chern_elem(m, p, lam[i] + j - i) for j in range(r)] for i in range(r)]
    return poly_det(matrix)


def schur(ctx: RootContext, lam: Sequence[int], coords: str = "roots") -> Poly:
    """Jacobi-Trudi determinant det(c_{lambda_i + j - i})."""
    lam = make_partition(lam)
    s = _schur_elem(ctx.m, ctx.p, lam)
    if coords == "elementary":
        return s
    if coords != "roots":
        raise ValueError(f"unknown coordinate system {coords!r}")
    return ctx.to_roots(s)


def combo_to_poly(combo: SchurCombo, ctx: RootContext, coords: str = "elementary") -> Poly:
    total = Poly.zero(ctx.elementary)
    for lam, c in combo.terms.items():
        total = total + _schur_elem(ctx.m, ctx.p, lam).scale(c)
    return total if coords == "elementary" else ctx.to_roots(total)


# ---------------------------------------------------------------------------
# expansion in the Schur basis


class SchurExpansionError(ValueError):
    """Raised when a polynomial is not a combination of the candidate Schur classes."""


def _chern_values_mod(avals, bvals, n, q):
    m = len(avals)
    s = [1]
    for k in range(1, n + 1):
        acc = 0
        for j in range(1, min(k, m) + 1):
            acc += avals[j - 1] * s[k - j]
        s.append(-acc % q)
    b = [1] + list(bvals)
    c = []
    for i in range(n + 1):
        acc = 0
        for k in range(0, min(i, len(b) - 1) + 1):
            acc += b[k] * s[i - k]
        c.append(acc % q)
    return c


def _det_mod(mat, q):
    mat = [row[:] for row in mat]
    n = len(mat)
    det = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] % q), None)
        if piv is None:
            return 0
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        pv = mat[col][col]
        det = det * pv % q
        inv = pow(pv, q - 2, q)
        for r in range(col + 1, n):
            f = mat[r][col] * inv % q
            if f:
                rr, rc = mat[r], mat[col]
                for k in range(col, n):
                    rr[k] = (rr[k] - f * rc[k]) % q
    return det % q


def _schur_value_mod(lam, c, q):
    r = len(lam)
    if r == 0:
        return 1
    mat = [[c[lam[i] + j - i] if lam[i] + j - i >= 0 else 0 for j in range(r)] for i in range(r)]
    return _det_mod(mat, q)


def schur_expand(poly: Poly, ctx: RootContext, seed: int = 20240607) -> SchurCombo:
    """Coefficients ``x_lambda`` with ``poly = sum x_lambda * Delta_lambda``.

    ``poly`` may be given in root or elementary coordinates.  Candidates
    are the hook partitions ``lambda_{p+1} <= m`` of the degree.  The
    coefficients are found from values at random integer points (linear
    algebra modulo primes, lifted to Q) and then certified by an exact
    symbolic comparison, so a wrong lift cannot go unnoticed.  A full-rank
    evaluation matrix certifies that the candidates are independent.
    """
    import numpy as np

    if poly.table == ctx.roots:
        try:
            poly = to_elementary(poly, ctx)
        except ValueError as exc:
            raise SchurExpansionError(f"not a symmetric function of the roots: {exc}") from exc
    elif poly.table != ctx.elementary:
        raise ValueError("polynomial must be over the root or elementary table of the context")
    if poly.is_zero():
        return SchurCombo()
    d = poly.weighted_degree()
    if d is None:
        raise SchurExpansionError("input is not homogeneous")
    if d == 0:
        return SchurCombo({(): poly.constant_term()})
    cands = hook_partitions(d, ctx.m, ctx.p)
    rng = random.Random(seed)
    nv = ctx.m + ctx.p
    points = [[rng.randint(-10 ** 6, 10 ** 6) for _ in range(nv)] for _ in range(len(cands) + 8)]
    top = d + max(len(lam) for lam in cands)

    def block(q, indices):
        sel = range(len(points)) if indices is None else indices
        A = np.zeros((len(sel), len(cands)), dtype=np.int64)
        b = np.zeros(len(sel), dtype=np.int64)
        for i, k in enumerate(sel):
            vals = [v % q for v in points[k]]
            c = _chern_values_mod(vals[:ctx.m], vals[ctx.m:], top, q)
            for j, lam in enumerate(cands):
                A[i, j] = _schur_value_mod(lam, c, q)
            b[i] = poly.eval_mod(vals, q)
        return A, b

    def accept(x):
        combo = SchurCombo({lam: v for lam, v in zip(cands, x) if v})
        return combo_to_poly(combo, ctx) == poly

    sol, rank, consistent = modular_unique_solve(block, len(points), len(cands), accept=accept)
    if rank < len(cands):
        raise SchurExpansionError(
            f"basis degenerate: {len(cands)} candidate Schur classes have rank {rank} "
            f"at (m, p) = ({ctx.m}, {ctx.p})")
    if not consistent or sol is None:
        raise SchurExpansionError("not in the span of the Schur classes")
    return SchurCombo({lam: v for lam, v in zip(cands, sol) if v})
