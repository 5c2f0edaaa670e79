"""Exact sparse multivariate polynomials and rational functions over Q.

Coefficients are Python ints when integral and :class:`fractions.Fraction`
otherwise; no floating point is used anywhere.  Polynomials live over a
:class:`VarTable` (ordered, weighted variables) and are immutable.
"""

from __future__ import annotations

import ast
import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Coef = Union[int, Fraction]

__all__ = [
    "VarTable",
    "Poly",
    "RatFun",
    "LinearSolution",
    "solve_linear",
    "solve_unique",
    "weighted_monomials",
    "format_rational",
    "parse_rational",
    "parse_poly",
]


def _norm(c: Coef) -> Coef:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def parse_rational(s: str | int | Fraction) -> Coef:
    if isinstance(s, (int, Fraction)):
        return _norm(Fraction(s))
    return _norm(Fraction(s.strip()))


def format_rational(c: Coef) -> str:
    """``"num/den"`` encoding used by every JSON payload."""
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class VarTable:
    """Ordered variable names with positive integer weights."""

    names: tuple[str, ...]
    weights: tuple[int, ...] = field(default=())

    def __post_init__(self):
        names = tuple(self.names)
        weights = tuple(self.weights) if self.weights else (1,) * len(names)
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if len(weights) != len(names) or any(w < 1 for w in weights):
            raise ValueError("weights must be positive and match the names")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def wdeg(self, exp: Sequence[int]) -> int:
        return sum(e * w for e, w in zip(exp, self.weights))

    def poly(self, value: str | Coef | Poly) -> "Poly":
        """Build a polynomial from a variable name or a constant."""
        if isinstance(value, Poly):
            return value
        if isinstance(value, str) and value in self._index:
            return Poly.var(self, value)
        return Poly.const(self, parse_rational(value))

    def vars(self) -> list["Poly"]:
        return [Poly.var(self, n) for n in self.names]


def weighted_monomials(table: VarTable, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given weighted degree, in canonical order."""
    out: list[tuple[int, ...]] = []
    n = len(table)
    w = table.weights

    def rec(i: int, left: int, acc: list[int]):
        if i == n - 1:
            if left % w[i] == 0:
                out.append(tuple(acc + [left // w[i]]))
            return
        for e in range(left // w[i] + 1):
            rec(i + 1, left - e * w[i], acc + [e])

    if n == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    out.sort(key=lambda e: _order_key(table, e), reverse=True)
    return out


def _order_key(table: VarTable, exp: tuple[int, ...]):
    # graded, ties broken lexicographically with the LAST variable most significant
    return (table.wdeg(exp), exp[::-1])


class Poly:
    """Immutable sparse polynomial: ``{exponent tuple: nonzero coefficient}``."""

    __slots__ = ("table", "terms", "_hash")

    def __init__(self, table: VarTable, terms: Mapping[tuple[int, ...], Coef] | None = None,
                 _trusted: bool = False):
        self.table = table
        if _trusted:
            self.terms = terms  # type: ignore[assignment]
        else:
            clean: dict[tuple[int, ...], Coef] = {}
            n = len(table)
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != n:
                    raise ValueError(f"exponent {e} does not match table arity {n}")
                if any(x < 0 for x in e):
                    raise ValueError(f"negative exponent {e}")
                c = _norm(Fraction(c)) if not isinstance(c, int) else c
                if c:
                    clean[e] = clean.get(e, 0) + c
                    if not clean[e]:
                        del clean[e]
            self.terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls, table: VarTable) -> "Poly":
        return cls(table, {}, _trusted=True)

    @classmethod
    def const(cls, table: VarTable, c: Coef) -> "Poly":
        c = _norm(Fraction(c))
        return cls(table, {(0,) * len(table): c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, table: VarTable, name: str, power: int = 1) -> "Poly":
        e = [0] * len(table)
        e[table.index(name)] = power
        return cls(table, {tuple(e): 1}, _trusted=True)

    @classmethod
    def monomial(cls, table: VarTable, exp: Sequence[int], coef: Coef = 1) -> "Poly":
        return cls(table, {tuple(exp): coef})

    @classmethod
    def linear(cls, table: VarTable, coeffs: Mapping[str, Coef]) -> "Poly":
        terms = {}
        n = len(table)
        for name, c in coeffs.items():
            e = [0] * n
            e[table.index(name)] = 1
            terms[tuple(e)] = c
        return cls(table, terms)

    # -- basic queries ------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coeff(self, exp: Sequence[int]) -> Coef:
        return self.terms.get(tuple(exp), 0)

    def constant_term(self) -> Coef:
        return self.terms.get((0,) * len(self.table), 0)

    def is_constant(self) -> bool:
        z = (0,) * len(self.table)
        return all(e == z for e in self.terms)

    def weighted_degree(self) -> int | None:
        """Common weighted degree of all terms; ``None`` when inhomogeneous.

        The zero polynomial is reported as degree 0.
        """
        degs = {self.table.wdeg(e) for e in self.terms}
        if not degs:
            return 0
        if len(degs) == 1:
            return degs.pop()
        return None

    def max_degree(self) -> int:
        return max((self.table.wdeg(e) for e in self.terms), default=0)

    def variables(self) -> set[str]:
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(self.table.names[i])
        return used

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Coef]]:
        t = self.table
        return sorted(self.terms.items(), key=lambda kv: _order_key(t, kv[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], Coef]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        t = self.table
        return max(self.terms.items(), key=lambda kv: _order_key(t, kv[0]))

    def content(self) -> Fraction:
        """Positive rational c with self/c primitive integral (0 for zero)."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            c = Fraction(c)
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "Poly"):
        if other.table != self.table:
            raise ValueError("polynomials over different variable tables")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.table, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        for e, c in b.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _norm(v) if type(v) is Fraction else v
            else:
                out.pop(e, None)
        return Poly(self.table, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.table, {e: -c for e, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) - c
            if v:
                out[e] = _norm(v) if type(v) is Fraction else v
            else:
                out.pop(e, None)
        return Poly(self.table, out, _trusted=True)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Coef) -> "Poly":
        c = _norm(Fraction(c)) if not isinstance(c, int) else c
        if not c:
            return Poly.zero(self.table)
        if c == 1:
            return self
        if type(c) is int:
            return Poly(self.table, {e: v * c for e, v in self.terms.items()}, _trusted=True)
        return Poly(self.table, {e: _norm(v * c) for e, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if not a or not b:
            return Poly.zero(self.table)
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        n = len(self.table)
        if n == 1:
            for (eb,), cb in b.items():
                for (ea,), ca in a.items():
                    k = (ea + eb,)
                    out[k] = get(k, 0) + ca * cb
        else:
            for eb, cb in b.items():
                for ea, ca in a.items():
                    k = tuple([x + y for x, y in zip(ea, eb)])
                    out[k] = get(k, 0) + ca * cb
        clean = {}
        for k, v in out.items():
            if v:
                clean[k] = _norm(v) if type(v) is Fraction else v
        return Poly(self.table, clean, _trusted=True)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        if isinstance(other, Poly):
            q = self.divide_exact(other)
            if q is None:
                raise ValueError("polynomial division is not exact")
            return q
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = Poly.const(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(self.table, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table, frozenset(self.terms.items())))
        return self._hash

    # -- division ------------------------------------------------------
    def divide_exact(self, den: "Poly") -> "Poly | None":
        """Quotient if ``den`` divides ``self`` exactly, else ``None``.

        Division by lex-leading terms; a non-divisible leading remainder
        term proves non-divisibility.
        """
        self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Poly.zero(self.table)
        lead_e = max(den.terms)
        lead_c = den.terms[lead_e]
        dterms = [(e, c) for e, c in den.terms.items() if e != lead_e]
        rem = dict(self.terms)
        heap = [tuple(-x for x in e) for e in rem]
        heapq.heapify(heap)
        quot: dict = {}
        inv_int = lead_c in (1, -1)
        while rem:
            while True:
                top = tuple(-x for x in heapq.heappop(heap))
                if top in rem:
                    break
            c = rem.pop(top)
            shift = tuple(a - b for a, b in zip(top, lead_e))
            if any(s < 0 for s in shift):
                return None
            if inv_int:
                qc = c * lead_c
            else:
                qc = _norm(Fraction(c) / lead_c)
            quot[shift] = qc
            for e, dc in dterms:
                k = tuple(a + b for a, b in zip(shift, e))
                v = rem.get(k, 0) - qc * dc
                if v:
                    if k not in rem:
                        heapq.heappush(heap, tuple(-x for x in k))
                    rem[k] = _norm(v) if type(v) is Fraction else v
                else:
                    rem.pop(k, None)
        return Poly(self.table, quot, _trusted=True)

    # -- calculus / evaluation -----------------------------------------
    def diff(self, name: str) -> "Poly":
        i = self.table.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                k = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[k] = c * e[i]
        return Poly(self.table, out, _trusted=True)

    def derivation(self, images: Mapping[str, "Poly"]) -> "Poly":
        """Apply the derivation sending each variable ``x`` to ``images[x]``.

        Computes ``sum_x images[x] * d(self)/dx``; unspecified variables are
        mapped to zero.
        """
        result = Poly.zero(self.table)
        for name, img in images.items():
            if img.is_zero():
                continue
            d = self.diff(name)
            if d:
                result = result + img * d
        return result

    def __call__(self, values: Mapping[str, Coef] | Sequence[Coef]) -> Coef:
        if isinstance(values, Mapping):
            vals = [values[n] for n in self.table.names]
        else:
            vals = list(values)
            if len(vals) != len(self.table):
                raise ValueError("wrong number of values")
        powers: list[dict[int, Coef]] = [dict() for _ in vals]
        total: Coef = 0
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    p = powers[i].get(k)
                    if p is None:
                        p = vals[i] ** k
                        powers[i][k] = p
                    t = t * p
            total += t
        return _norm(Fraction(total)) if not isinstance(total, int) else total

    def eval_mod(self, values: Sequence[int], p: int) -> int:
        """Value modulo the prime ``p`` at integer ``values``."""
        total = 0
        for e, c in self.terms.items():
            if type(c) is Fraction:
                t = c.numerator * pow(c.denominator, -1, p)
            else:
                t = c
            for v, k in zip(values, e):
                if k:
                    t = t * pow(v, k, p) % p
            total += t
        return total % p

    def substitute(self, mapping: Mapping[str, "Poly"], target: VarTable | None = None) -> "Poly":
        """Compose with ``mapping`` (variable name -> polynomial over ``target``).

        Every variable of ``self`` must have an image.  Terms are grouped by
        the leading variable so shared prefixes are expanded once.
        """
        if target is None:
            imgs = list(mapping.values())
            if not imgs:
                target = self.table
            else:
                target = imgs[0].table
        images: list[Poly | None] = []
        used = [False] * len(self.table)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        for i, name in enumerate(self.table.names):
            img = mapping.get(name)
            if img is None:
                if used[i]:
                    raise ValueError(f"no image given for variable {name!r}")
                images.append(None)
                continue
            if img.table != target:
                raise ValueError(f"image of {name!r} lives over a different table")
            images.append(img)
        powcache: list[dict[int, Poly]] = [dict() for _ in images]

        def power(i: int, k: int) -> Poly:
            cache = powcache[i]
            p = cache.get(k)
            if p is None:
                if k == 1:
                    p = images[i]
                else:
                    half = power(i, k // 2)
                    p = half * half
                    if k % 2:
                        p = p * images[i]
                cache[k] = p
            return p

        def rec(i: int, terms: list[tuple[tuple[int, ...], Coef]]) -> Poly:
            if i == len(images):
                c = sum(c for _, c in terms)
                return Poly.const(target, c)
            groups: dict[int, list] = {}
            for e, c in terms:
                groups.setdefault(e[i], []).append((e, c))
            acc = Poly.zero(target)
            for k, sub in groups.items():
                inner = rec(i + 1, sub)
                if k:
                    inner = inner * power(i, k)
                acc = acc + inner
            return acc

        if not self.terms:
            return Poly.zero(target)
        return rec(0, list(self.terms.items()))

    def retable(self, target: VarTable, rename: Mapping[str, str] | None = None) -> "Poly":
        """Re-express over ``target`` by variable name (optionally renamed)."""
        rename = rename or {}
        idx = []
        for i, n in enumerate(self.table.names):
            tn = rename.get(n, n)
            idx.append(target.index(tn) if tn in target else None)
        out = {}
        m = len(target)
        for e, c in self.terms.items():
            k = [0] * m
            for i, x in enumerate(e):
                if x:
                    if idx[i] is None:
                        raise ValueError(f"variable {self.table.names[i]!r} missing from target")
                    k[idx[i]] += x
            k = tuple(k)
            out[k] = out.get(k, 0) + c
        return Poly(target, out)

    def homogeneous_part(self, degree: int) -> "Poly":
        t = self.table
        return Poly(t, {e: c for e, c in self.terms.items() if t.wdeg(e) == degree}, _trusted=True)

    # -- printing ------------------------------------------------------
    def monomial_str(self, exp: Sequence[int]) -> str:
        parts = []
        for name, k in zip(self.table.names, exp):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (e, c) in enumerate(self.sorted_terms()):
            mono = self.monomial_str(e)
            neg = c < 0
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{_fmt_coef(a)}*{mono}"
            else:
                body = _fmt_coef(a)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Poly({self})"

    # -- JSON ------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": list(self.table.names),
            "terms": [{"exp": list(e), "coef": format_rational(c)} for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping, table: VarTable | None = None) -> "Poly":
        names = tuple(data["vars"])
        if table is None:
            table = VarTable(names)
        elif table.names != names:
            raise ValueError("JSON variable list does not match the table")
        return cls(table, {tuple(t["exp"]): parse_rational(t["coef"]) for t in data["terms"]})


def parse_poly(text: str, table: VarTable) -> Poly:
    """Read ``"8*(v1 - 2*u1)^2"`` style input over ``table``.

    Accepts integers, ``/`` by constants, ``*``, ``^`` (or ``**``) with
    nonnegative integer exponents, signs and parentheses.
    """
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse polynomial {text!r}") from exc

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Poly.const(table, node.value)
        if isinstance(node, ast.Name):
            if node.id not in table.names:
                raise ValueError(f"unknown variable {node.id!r} in {text!r}")
            return Poly.var(table, node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a = ev(node.left)
            if isinstance(node.op, ast.Pow):
                b = ev(node.right)
                if not b.is_constant() or Fraction(b.constant_term()).denominator != 1 or b.constant_term() < 0:
                    raise ValueError(f"bad exponent in {text!r}")
                return a ** int(b.constant_term())
            b = ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div) and b.is_constant() and b.constant_term() != 0:
                return a.scale(Fraction(1) / Fraction(b.constant_term()))
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    return ev(tree)


def _fmt_coef(c: Coef) -> str:
    c = _norm(Fraction(c))
    return str(c)


# ---------------------------------------------------------------------------
# rational functions


def _univariate_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd of two univariate polynomials (Euclid over Q)."""
    while not b.is_zero():
        a, b = b, _univariate_rem(a, b)
    if a.is_zero():
        return a
    lc = a.terms[max(a.terms)]
    return a.scale(Fraction(1) / lc)


def _univariate_rem(a: Poly, b: Poly) -> Poly:
    t = a.table
    db = max(b.terms)[0]
    lb = b.terms[(db,)]
    r = a
    while not r.is_zero():
        dr = max(r.terms)[0]
        if dr < db:
            break
        c = Fraction(r.terms[(dr,)]) / lb
        r = r - b * Poly(t, {(dr - db,): _norm(c)}, _trusted=True)
    return r


class RatFun:
    """Quotient of two polynomials kept in a canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduce: bool = True):
        if den is None:
            den = Poly.const(num.table, 1)
        if num.table != den.table:
            raise ValueError("numerator and denominator over different tables")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den
        if reduce:
            self.num, self.den = _reduce_pair(num, den)

    @property
    def table(self) -> VarTable:
        return self.num.table

    def _lift(self, other) -> "RatFun":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun(other)
        if isinstance(other, (int, Fraction)):
            return RatFun(Poly.const(self.table, other))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFun(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int):
        if k < 0:
            return RatFun(self.den, self.num) ** (-k)
        return RatFun(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def as_poly(self) -> Poly | None:
        """The polynomial this function equals, or ``None``."""
        return self.num.divide_exact(self.den)

    def substitute(self, mapping: Mapping[str, "Poly | RatFun"], target: VarTable) -> "RatFun":
        polys = {k: v for k, v in mapping.items() if isinstance(v, Poly)}
        if len(polys) == len(mapping):
            return RatFun(self.num.substitute(polys, target), self.den.substitute(polys, target))
        return _ratsub(self.num, mapping, target) / _ratsub(self.den, mapping, target)

    def __call__(self, values) -> Coef:
        d = self.den(values)
        if d == 0:
            raise ZeroDivisionError("pole of the rational function")
        return _norm(Fraction(self.num(values)) / d)

    def __str__(self) -> str:
        if self.den.is_constant() and self.den.constant_term() == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _ratsub(p: Poly, mapping, target) -> RatFun:
    total = RatFun(Poly.zero(target))
    for e, c in p.terms.items():
        t = RatFun(Poly.const(target, c))
        for name, k in zip(p.table.names, e):
            if k:
                img = mapping[name]
                img = img if isinstance(img, RatFun) else RatFun(img)
                t = t * img ** k
        total = total + t
    return total


def reduce_ratfun(f: RatFun) -> RatFun:
    return RatFun(f.num, f.den)


def _reduce_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    table = num.table
    if num.is_zero():
        return Poly.zero(table), Poly.const(table, 1)
    q = num.divide_exact(den)
    if q is not None:
        return q, Poly.const(table, 1)
    if len(table) == 1:
        g = _univariate_gcd(num, den)
        if not g.is_constant():
            num = num.divide_exact(g)
            den = den.divide_exact(g)
    else:
        num, den = _strip_monomial_factor(num, den)
    # content: make the denominator primitive integral with positive leading coefficient
    c = den.content()
    _, lc = den.leading()
    if lc < 0:
        c = -c
    return num.scale(Fraction(1) / c), den.scale(Fraction(1) / c)


def _strip_monomial_factor(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    n = len(num.table)
    common = [min(e[i] for e in list(num.terms) + list(den.terms)) for i in range(n)]
    if any(common):
        shift = tuple(common)
        num = Poly(num.table, {tuple(a - b for a, b in zip(e, shift)): c for e, c in num.terms.items()}, _trusted=True)
        den = Poly(den.table, {tuple(a - b for a, b in zip(e, shift)): c for e, c in den.terms.items()}, _trusted=True)
    return num, den


# ---------------------------------------------------------------------------
# linear algebra


@dataclass
class LinearSolution:
    """Outcome of an exact linear solve.

    ``status`` is ``"unique"``, ``"family"`` or ``"inconsistent"``;
    ``dimension`` is the dimension of the affine solution set (``-1`` when
    inconsistent).  ``particular`` is one solution, ``nullspace`` a basis
    of the homogeneous solutions.
    """

    status: str
    dimension: int
    particular: list[Coef] | None
    nullspace: list[list[Coef]]
    rank: int

    @property
    def unique(self) -> bool:
        return self.status == "unique"


def solve_linear(rows: Iterable[Mapping[int, Coef] | Sequence[Coef]], rhs: Iterable[Coef] | None,
                 n: int) -> LinearSolution:
    """Gauss-Jordan elimination over Q for ``A x = b``.

    ``rows`` may be dense sequences or sparse ``{column: coef}`` maps.
    ``rhs=None`` means the homogeneous system.
    """
    rows = list(rows)
    rhs = [0] * len(rows) if rhs is None else list(rhs)
    if len(rhs) != len(rows):
        raise ValueError("row/rhs length mismatch")
    pivots: dict[int, tuple[dict[int, Fraction], Fraction]] = {}
    order: list[int] = []
    inconsistent = False
    for row, b in zip(rows, rhs):
        if isinstance(row, Mapping):
            r = {j: Fraction(c) for j, c in row.items() if c}
        else:
            r = {j: Fraction(c) for j, c in enumerate(row) if c}
        b = Fraction(b)
        # reduce against existing pivots
        changed = True
        while changed:
            changed = False
            for j in list(r):
                if j in pivots and j in r:
                    f = r[j]
                    prow, pb = pivots[j]
                    for k, v in prow.items():
                        nv = r.get(k, 0) - f * v
                        if nv:
                            r[k] = nv
                        else:
                            r.pop(k, None)
                    b -= f * pb
                    changed = True
        if not r:
            if b:
                inconsistent = True
            continue
        j = min(r)
        f = r[j]
        r = {k: v / f for k, v in r.items()}
        b = b / f
        # eliminate j from existing pivot rows (keep reduced form)
        for pj in order:
            prow, pb = pivots[pj]
            if j in prow:
                g = prow[j]
                for k, v in r.items():
                    nv = prow.get(k, 0) - g * v
                    if nv:
                        prow[k] = nv
                    else:
                        prow.pop(k, None)
                pivots[pj] = (prow, pb - g * b)
        pivots[j] = (r, b)
        order.append(j)
    rank = len(pivots)
    if inconsistent:
        return LinearSolution("inconsistent", -1, None, [], rank)
    free = [j for j in range(n) if j not in pivots]
    particular = [0] * n
    for j, (prow, pb) in pivots.items():
        particular[j] = _norm(pb)
    nullspace = []
    for fj in free:
        vec = [0] * n
        vec[fj] = 1
        for j, (prow, pb) in pivots.items():
            if fj in prow:
                vec[j] = _norm(-prow[fj])
        nullspace.append(vec)
    status = "unique" if not free else "family"
    return LinearSolution(status, len(free), particular, nullspace, rank)


def _primes_below(bound: int, count: int) -> tuple[int, ...]:
    out = []
    c = bound - 1
    while len(out) < count:
        if c % 2 and all(c % f for f in range(3, math.isqrt(c) + 1, 2)):
            out.append(c)
        c -= 1
    return tuple(out)


# below 2^21: products stay below 2^42, so float64 matmuls with inner
# dimension <= 2048 are exact
_PRIMES = _primes_below(1 << 21, 24)
_MATMUL_K = 2048


def _matmul_mod(A, B, p: int):
    """Exact ``A @ B mod p`` for int64 matrices with entries in [0, p)."""
    import numpy as np

    k = A.shape[1]
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for s in range(0, k, _MATMUL_K):
        a = A[:, s:s + _MATMUL_K].astype(np.float64)
        b = B[s:s + _MATMUL_K].astype(np.float64)
        out = (out + np.rint(a @ b).astype(np.int64) % p) % p
    return out


def modular_echelon(M, p: int, ncols: int | None = None, chunk: int = 384):
    """Reduced row echelon form of an integer matrix modulo the prime ``p``.

    Pivots are only taken among the first ``ncols`` columns (all by
    default), so an augmented column can ride along.  Rows are processed in
    blocks: each block is first reduced against the basis found so far with
    one exact matrix product, then eliminated internally.

    Returns ``(rank, pivot_columns, basis_rows, E, inconsistent)`` where ``E``
    holds the reduced basis rows, ``basis_rows`` the indices of original rows
    spanning the row space, and ``inconsistent`` flags a row reducing to
    ``0 = nonzero`` in the augmented part.
    """
    import numpy as np

    M = np.asarray(M, dtype=np.int64) % p
    m, w = M.shape
    ncols = w if ncols is None else ncols
    E = np.zeros((0, w), dtype=np.int64)
    pivcols: list[int] = []
    basis: list[int] = []
    inconsistent = False
    for start in range(0, m, chunk):
        C = M[start:start + chunk].copy()
        idx = np.arange(start, start + C.shape[0])
        if pivcols:
            C = (C - _matmul_mod(C[:, pivcols], E, p)) % p
        keep = np.any(C[:, :ncols] != 0, axis=1)
        if w > ncols and np.any(~keep & np.any(C[:, ncols:] != 0, axis=1)):
            inconsistent = True
        C, idx = C[keep], idx[keep]
        new_piv: list[int] = []
        new_rows: list[int] = []
        r = 0
        for col in range(ncols):
            if r == C.shape[0]:
                break
            nz = np.flatnonzero(C[r:, col])
            if nz.size == 0:
                continue
            piv = r + int(nz[0])
            if piv != r:
                C[[r, piv]] = C[[piv, r]]
                idx[[r, piv]] = idx[[piv, r]]
            C[r] = (C[r] * pow(int(C[r, col]), p - 2, p)) % p
            others = np.flatnonzero(C[:, col])
            others = others[others != r]
            if others.size:
                f = C[others, col].copy()
                C[others] = (C[others] - (f[:, None] * C[r][None, :]) % p) % p
            new_piv.append(col)
            new_rows.append(int(idx[r]))
            r += 1
        if w > ncols and r < C.shape[0] and np.any(C[r:, ncols:] != 0):
            inconsistent = True
        if r:
            Cn = C[:r]
            if E.shape[0]:
                E = (E - _matmul_mod(E[:, new_piv], Cn, p)) % p
            E = np.concatenate([E, Cn])
            pivcols.extend(new_piv)
            basis.extend(new_rows)
    order = np.argsort(pivcols, kind="stable")
    E = E[order] if E.shape[0] else E
    pivcols = [pivcols[k] for k in order]
    basis = [basis[k] for k in order]
    return len(pivcols), pivcols, basis, E, inconsistent


def _modular_solve(rows_mod, rhs_mod, n: int, p: int):
    """Row-reduce ``[A | b]`` mod p; return (rank, solution or None, consistent)."""
    import numpy as np

    M = np.zeros((len(rows_mod), n + 1), dtype=np.int64)
    for i, (row, b) in enumerate(zip(rows_mod, rhs_mod)):
        for j, v in row.items():
            M[i, j] = v % p
        M[i, n] = b % p
    rank, pivcols, _, E, bad = modular_echelon(M, p, n)
    if rank < n:
        return rank, None, not bad
    sol = [0] * n
    for i, c in enumerate(pivcols):
        sol[c] = int(E[i, n])
    return rank, sol, not bad


def _rational_reconstruct(a: int, m: int) -> Fraction | None:
    bound = math.isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def _crt_pair(a: int, m: int, b: int, p: int) -> int:
    t = ((b - a) * pow(m, -1, p)) % p
    return a + m * t


def modular_unique_solve(row_block, nrows: int, n: int, accept=None):
    """Find the unique rational solution of a large system from residues.

    ``row_block(p, indices)`` must return ``(A, b)`` reduced modulo the prime
    ``p`` for the requested row indices (``None`` meaning all rows), as
    integer arrays.  The first prime selects ``n`` independent rows; later
    primes only re-evaluate that square block.  Candidates are lifted by
    CRT and rational reconstruction and handed to ``accept`` (which must do
    an exact check); the first accepted candidate is returned.

    Returns ``(solution or None, rank, consistent)``.  A rank of ``n``
    modulo a prime certifies that the rows are independent over Q whenever
    they come from integer data, so the solution is then unique.
    """
    import numpy as np

    def solve_at(p, indices):
        A, b = row_block(p, indices)
        aug = np.concatenate([np.asarray(A, dtype=np.int64) % p,
                              np.asarray(b, dtype=np.int64).reshape(-1, 1) % p], axis=1)
        rank, pivcols, basis, E, bad = modular_echelon(aug, p, n)
        sol = None
        if rank == n:
            sol = [0] * n
            for i, c in enumerate(pivcols):
                sol[c] = int(E[i, n])
        return rank, basis, sol, not bad

    rank, basis, sol, consistent = solve_at(_PRIMES[0], None)
    if rank < n or not consistent:
        return None, rank, consistent
    crt, modulus = sol, _PRIMES[0]
    previous = None
    for p in _PRIMES[1:] + (None,):
        cand = [_rational_reconstruct(c, modulus) for c in crt]
        if all(c is not None for c in cand):
            cand = [_norm(c) for c in cand]
            # only trust a lift that survived one more prime
            if cand == previous and (accept is None or accept(cand)):
                return cand, rank, True
            previous = cand
        else:
            previous = None
        if p is None:
            break
        r2, _, s2, ok = solve_at(p, basis)
        if r2 < n or not ok:
            continue
        crt = [_crt_pair(c, modulus, s, p) for c, s in zip(crt, s2)]
        modulus *= p
    return None, rank, True


def solve_unique(rows: Sequence[Mapping[int, Coef]], rhs: Sequence[Coef], n: int) -> LinearSolution:
    """Solve a large, expected-unique system exactly.

    Rank and solution are found modulo word-size primes (numpy), the
    solution is lifted by CRT and rational reconstruction, and then checked
    against every original equation in exact arithmetic.  Full rank modulo
    a prime certifies full rank over Q, so a verified lift is the unique
    rational solution.  Anything else falls back to :func:`solve_linear`.
    """
    import numpy as np

    rows = list(rows)
    rhs = list(rhs)
    int_rows = []
    int_rhs = []
    for row, b in zip(rows, rhs):
        den = 1
        for v in list(row.values()) + [b]:
            if type(v) is Fraction:
                den = den * v.denominator // math.gcd(den, v.denominator)
        int_rows.append({j: int(v * den) for j, v in row.items() if v})
        int_rhs.append(int(b * den))
    if not int_rows or n == 0:
        return solve_linear(rows, rhs, n)

    def block(p, indices):
        sel = range(len(int_rows)) if indices is None else indices
        A = np.zeros((len(sel), n), dtype=np.int64)
        bb = np.zeros(len(sel), dtype=np.int64)
        for i, k in enumerate(sel):
            for j, v in int_rows[k].items():
                A[i, j] = v % p
            bb[i] = int_rhs[k] % p
        return A, bb

    sol, rank, consistent = modular_unique_solve(
        block, len(int_rows), n, accept=lambda x: _check_solution(int_rows, int_rhs, x))
    if sol is not None:
        return LinearSolution("unique", 0, sol, [], n)
    return solve_linear(rows, rhs, n)


def _check_solution(rows, rhs, x) -> bool:
    for row, b in zip(rows, rhs):
        s = 0
        for j, v in row.items():
            s += v * x[j]
        if s != b:
            return False
    return True
