"""The orbit dataset for nets of conics and the restriction maps it induces.

Each row records a normal-form representative, the weights of a maximal
torus of its stabiliser on U and on V, the printed normal weights and
positivity functional, the degrees of free generators of the orbit's
equivariant cohomology ring, and the determinant-map image label.

Normal weights are also *derived*: the 18 weights of the representation
minus the weights of the tangent space of the orbit, computed from the
gl(U) + gl(V) action on the representative.  The derived list is what the
rest of the package uses; the printed list is kept verbatim for review.
"""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Sequence

from .exactalg import Poly, VarTable, solve_linear

PARAMS = ("alpha", "beta", "gamma", "delta", "epsilon", "kappa")
GREEK = {"alpha": "α", "beta": "β", "gamma": "γ", "delta": "δ", "epsilon": "ε", "kappa": "κ"}
CHERN = VarTable(("u1", "u2", "u3", "v1", "v2", "v3"), (1, 2, 3, 1, 2, 3))
QUAD_MONOMIALS = ((2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2))
QUAD_LABELS = ("x^2", "xy", "xz", "y^2", "yz", "z^2")

# ---------------------------------------------------------------------------
# linear forms


@dataclass(frozen=True)
class LinForm:
    """Integer linear form over the torus parameters."""

    coeffs: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, mapping: Mapping[str, int]) -> "LinForm":
        return cls(tuple(sorted(((k, int(v)) for k, v in mapping.items() if v),
                                key=lambda kv: PARAMS.index(kv[0]))))

    @classmethod
    def parse(cls, text: str) -> "LinForm":
        """Parse e.g. ``"2alpha - beta - gamma"`` or ``"2α - β - γ"``."""
        s = text.replace(" ", "")
        for name, glyph in GREEK.items():
            s = s.replace(glyph, name)
        if not s:
            raise ValueError("empty linear form")
        out: dict[str, int] = {}
        for sign, num, name in re.findall(r"([+-]?)(\d*)([a-z]+)", s):
            if name not in PARAMS:
                raise ValueError(f"unknown torus parameter {name!r} in {text!r}")
            c = int(num) if num else 1
            out[name] = out.get(name, 0) + (-c if sign == "-" else c)
        rebuilt = re.sub(r"([+-]?)(\d*)([a-z]+)", "", s)
        if rebuilt:
            raise ValueError(f"could not parse linear form {text!r}")
        return cls.of(out)

    def as_dict(self) -> dict[str, int]:
        return dict(self.coeffs)

    def __add__(self, other: "LinForm") -> "LinForm":
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return LinForm.of(d)

    def __neg__(self) -> "LinForm":
        return LinForm.of({k: -v for k, v in self.coeffs})

    def __sub__(self, other: "LinForm") -> "LinForm":
        return self + (-other)

    def scale(self, c: int) -> "LinForm":
        return LinForm.of({k: c * v for k, v in self.coeffs})

    def is_zero(self) -> bool:
        return not self.coeffs

    def params(self) -> set[str]:
        return {k for k, _ in self.coeffs}

    def evaluate(self, values: Mapping[str, Fraction | int]):
        return sum(Fraction(values[k]) * v for k, v in self.coeffs)

    def to_poly(self, table: VarTable) -> Poly:
        return Poly.linear(table, self.as_dict())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for i, (k, v) in enumerate(self.coeffs):
            g = GREEK[k]
            a = abs(v)
            body = g if a == 1 else f"{a}{g}"
            if i == 0:
                out.append(("-" if v < 0 else "") + body)
            else:
                out.append((" - " if v < 0 else " + ") + body)
        return "".join(out)

    def ascii(self) -> str:
        if not self.coeffs:
            return "0"
        out = []
        for i, (k, v) in enumerate(self.coeffs):
            a = abs(v)
            body = k if a == 1 else f"{a}{k}"
            if i == 0:
                out.append(("-" if v < 0 else "") + body)
            else:
                out.append((" - " if v < 0 else " + ") + body)
        return "".join(out)

    __repr__ = __str__


def _sort_key(w: LinForm):
    return tuple(w.as_dict().get(p, 0) for p in PARAMS)


# ---------------------------------------------------------------------------
# quadrics and nets (a light representation; module ``invariants`` adds the algebra)


def parse_quadric(text: str) -> tuple[Fraction, ...]:
    """Coefficient vector over (x^2, xy, xz, y^2, yz, z^2) of e.g. ``"y^2 + 2xz"``.

    ``2*x*z`` is accepted as well.
    """
    s = re.sub(r"([xyz])\*([xyz])", r"\1\2", text.replace(" ", ""))
    if s in ("", "0"):
        return (Fraction(0),) * 6
    coeffs = [Fraction(0)] * 6
    pos = 0
    pattern = re.compile(r"([+-]?)(\d*(?:/\d+)?)\*?([xyz](?:\^2)?[xyz]?)")
    for mt in pattern.finditer(s):
        if mt.start() != pos:
            raise ValueError(f"could not parse quadric {text!r}")
        pos = mt.end()
        sign, num, mono = mt.groups()
        c = Fraction(num) if num else Fraction(1)
        if sign == "-":
            c = -c
        exp = [0, 0, 0]
        m = mono.replace("^2", "2")
        i = 0
        while i < len(m):
            v = "xyz".index(m[i])
            if i + 1 < len(m) and m[i + 1] == "2":
                exp[v] += 2
                i += 2
            else:
                exp[v] += 1
                i += 1
        if sum(exp) != 2:
            raise ValueError(f"non-quadratic term {mono!r} in {text!r}")
        coeffs[QUAD_MONOMIALS.index(tuple(exp))] += c
    if pos != len(s):
        raise ValueError(f"could not parse quadric {text!r}")
    return tuple(coeffs)


def quadric_str(coeffs: Sequence[Fraction]) -> str:
    if not any(coeffs):
        return "0"
    out = []
    for i, (c, lab) in enumerate((c, l) for c, l in zip(coeffs, QUAD_LABELS) if c):
        a = abs(c)
        body = lab if a == 1 else f"{a}{lab}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# the dataset


@dataclass(frozen=True)
class OrbitRecord:
    name: str
    codim: int
    representative: tuple[tuple[Fraction, ...], ...]
    u_weights: tuple[LinForm, LinForm, LinForm]
    v_weights: tuple[LinForm, LinForm, LinForm]
    printed_normal_weights: tuple[LinForm, ...]
    printed_witness: tuple[int, ...] | None
    poincare_degrees: tuple[int, ...]
    delta_label: str
    stratum: str
    dual: str | None = None

    @property
    def params(self) -> tuple[str, ...]:
        used = set()
        for w in self.u_weights + self.v_weights:
            used |= w.params()
        return tuple(p for p in PARAMS if p in used)

    @property
    def torus_table(self) -> VarTable:
        return _torus_table(self.params)

    @property
    def normal_weights(self) -> tuple[LinForm, ...]:
        return derived_normal_weights(self)

    @property
    def expected_corank(self) -> int:
        return {"Σ0": 0, "Σ1": 1, "Σ2": 2, "zero": 3}[self.stratum]

    def representative_strings(self) -> list[str]:
        return [quadric_str(q) for q in self.representative]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "codim": self.codim,
            "stratum": self.stratum,
            "representative": self.representative_strings(),
            "u_weights": [w.ascii() for w in self.u_weights],
            "v_weights": [w.ascii() for w in self.v_weights],
            "normal_weights": [w.ascii() for w in self.normal_weights],
            "printed_normal_weights": [w.ascii() for w in self.printed_normal_weights],
            "printed_witness": list(self.printed_witness) if self.printed_witness is not None else None,
            "poincare_degrees": list(self.poincare_degrees),
            "delta_label": self.delta_label,
            "dual": self.dual,
        }


@lru_cache(maxsize=None)
def _torus_table(params: tuple[str, ...]) -> VarTable:
    return VarTable(params)


def _w(*forms: str) -> tuple[LinForm, ...]:
    return tuple(LinForm.parse(f) for f in forms)


# name, codim, stratum, representative, u, v, printed normal weights, witness,
# Poincare degrees, determinant label, dual
_ROWS = [
    ("C", 2, "Σ0", ("y^2 + 2xz", "2yz", "-x^2"),
     ("2alpha", "alpha+beta", "2beta"), ("2alpha+2beta", "alpha+3beta", "4alpha"),
     ("4alpha-4beta", "2alpha-2beta"), (1, 0), (1, 1), "ν", "C"),
    ("D", 2, "Σ0", ("x^2", "y^2", "z^2 + 2xy"),
     ("2alpha", "2beta", "alpha+beta"), ("4alpha", "4beta", "2alpha+2beta"),
     ("3alpha-3beta", "3beta-3alpha"), None, (1, 2), "θ", "D*"),
    ("D*", 2, "Σ0", ("2xz", "2yz", "z^2 + 2xy"),
     ("2alpha", "2beta", "alpha+beta"), ("3alpha+beta", "alpha+3beta", "2alpha+2beta"),
     ("3alpha-3beta", "3beta-3alpha"), None, (1, 2), "θ", "D"),
    ("E", 3, "Σ0", ("x^2", "y^2", "z^2"),
     ("alpha", "beta", "gamma"), ("2alpha", "2beta", "2gamma"),
     ("2alpha-beta-gamma", "2beta-alpha-gamma", "2gamma-alpha-beta"), None, (1, 2, 3), "A", "E*"),
    ("E*", 3, "Σ0", ("2xy", "2yz", "2xz"),
     ("alpha", "beta", "gamma"), ("alpha+beta", "beta+gamma", "gamma+alpha"),
     ("-2alpha+beta+gamma", "-2beta+alpha+gamma", "-2gamma+alpha+beta"), None, (1, 2, 3), "A", "E"),
    ("F", 3, "Σ0", ("x^2 + y^2", "2xy", "2yz"),
     ("alpha", "alpha", "beta"), ("2alpha", "2alpha", "alpha+beta"),
     ("2alpha-2beta", "2alpha-2beta", "alpha-beta"), (1, 0), (1, 1), "≠", "F*"),
    ("F*", 3, "Σ0", ("x^2 + y^2", "xz", "z^2"),
     ("alpha", "alpha", "beta"), ("2alpha", "alpha+beta", "2beta"),
     ("2beta-2alpha", "2beta-2alpha", "beta-alpha"), (-1, 0), (1, 1), "Ω", "F"),
    ("G", 4, "Σ0", ("x^2", "y^2", "yz"),
     ("alpha", "beta", "gamma"), ("2alpha", "2beta", "beta+gamma"),
     ("2alpha-2gamma", "beta-alpha", "2beta-alpha-gamma", "2beta-2gamma"), (1, 2, 0), (1, 1, 1), "≠", "G*"),
    ("G*", 4, "Σ0", ("xy", "xz", "z^2"),
     ("alpha", "beta", "gamma"), ("alpha+beta", "alpha+gamma", "2gamma"),
     ("2gamma-2alpha", "alpha-beta", "-2beta+alpha+gamma", "2gamma-2beta"), (-1, -2, 0), (1, 1, 1), "≠", "G"),
    ("H", 5, "Σ0", ("x^2", "2xy", "y^2 + 2xz"),
     ("2alpha", "alpha+beta", "2beta"), ("4alpha", "3alpha+beta", "2alpha+2beta"),
     ("2alpha-2beta", "2alpha-2beta", "3alpha-3beta", "3alpha-3beta", "4alpha-4beta"), (1, 0), (1, 1), "Ξ", "H"),
    ("I", 7, "Σ0", ("x^2", "xy", "y^2"),
     ("alpha", "beta", "gamma"), ("2alpha", "alpha+beta", "2beta"),
     ("alpha-gamma", "2alpha-beta-gamma", "2alpha-2gamma", "beta-gamma", "-2gamma+alpha+beta", "2beta-2gamma"),
     (0, 0, -1), (1, 1, 2), "0", "I*"),
    ("I*", 7, "Σ0", ("xz", "yz", "z^2"),
     ("alpha", "beta", "gamma"), ("alpha+gamma", "beta+gamma", "2gamma"),
     ("-alpha+gamma", "-2alpha+beta+gamma", "-2alpha+2gamma", "-beta+gamma", "2gamma-alpha-beta", "-2beta+2gamma"),
     (0, 0, 1), (1, 1, 2), "0", "I"),
    ("(1^4)", 4, "Σ1", ("x^2 - xz", "y^2 - yz", "0"),
     ("alpha", "alpha", "alpha"), ("2alpha", "2alpha", "beta"),
     ("beta-2gamma", "beta-2gamma", "beta-2gamma", "beta-2gamma"), (1, 0), (1, 1), "K", None),
    ("(21^2)", 5, "Σ1", ("xy", "xz + yz", "0"),
     ("alpha", "alpha", "beta"), ("2alpha", "alpha+beta", "gamma"),
     ("2alpha-2beta", "gamma-2alpha", "gamma-2alpha", "gamma-alpha-beta", "gamma-2beta"), (1, 0, 3), (1, 1, 1), "≠", None),
    ("(31)", 6, "Σ1", ("xz", "x^2 - yz", "0"),
     ("alpha+beta", "2alpha", "2beta"), ("alpha+3beta", "2alpha+2beta", "gamma"),
     ("3beta-3alpha", "2beta-2alpha", "gamma-3alpha-beta", "gamma-4alpha", "gamma-2alpha-2beta", "gamma-4beta"),
     (0, 1, 5), (1, 1, 1), "Ξ", None),
    ("(22)", 6, "Σ1", ("x^2", "yz", "0"),
     ("alpha", "beta", "gamma"), ("2alpha", "beta+gamma", "delta"),
     ("2alpha-2beta", "2alpha-2gamma", "delta-alpha-beta", "delta-alpha-gamma", "delta-2beta", "delta-2gamma"),
     (1, 0, 0, 2), (1, 1, 2), "≠", None),
    ("(4)", 7, "Σ1", ("xz + y^2", "x^2", "0"),
     ("2alpha", "alpha+beta", "2beta"), ("2alpha+2beta", "4alpha", "gamma"),
     ("2alpha-2beta", "3alpha-3beta", "4alpha-4beta", "gamma-3alpha-beta", "gamma-2alpha-2beta", "gamma-4beta"),
     (1, 0, 5), (1, 1, 1), "Ξ", None),
    ("K", 8, "Σ1", ("y^2", "z^2", "0"),
     ("beta", "alpha", "gamma"), ("2alpha", "2gamma", "delta"),
     ("2alpha-2beta", "2alpha-beta-gamma", "2gamma-2beta", "2gamma-alpha-beta", "delta-2beta",
      "delta-alpha-beta", "delta-beta-gamma", "delta-alpha-gamma"), (0, -1, 0, 0), (1, 1, 1, 2), "0", None),
    ("L", 8, "Σ1", ("xy", "xz", "0"),
     ("alpha", "beta", "gamma"), ("alpha+beta", "alpha+gamma", "delta"),
     ("alpha-beta", "alpha-gamma", "alpha+beta-2gamma", "alpha+gamma-2beta", "delta-2alpha", "delta-2beta",
      "delta-2gamma", "delta-beta-gamma"), (1, 0, 0, 3), (1, 1, 1, 2), "0", None),
    ("M", 9, "Σ1", ("yz", "y^2", "0"),
     ("alpha", "beta", "gamma"), ("beta+gamma", "2beta", "delta"),
     ("beta+gamma-2alpha", "beta-alpha", "2beta-2alpha", "2beta-alpha-gamma", "2beta-2gamma", "delta-2alpha",
      "delta-alpha-beta", "delta-alpha-gamma", "delta-2gamma"), (0, 1, 0, 2), (1, 1, 1, 1), "0", None),
    ("S", 10, "Σ2", ("xy - z^2", "0", "0"),
     ("2alpha", "2beta", "alpha+beta"), ("2alpha+2beta", "gamma", "delta"),
     ("gamma-2alpha-2beta", "gamma-3alpha-beta", "gamma-4alpha", "gamma-alpha-3beta", "gamma-4beta",
      "delta-2alpha-2beta", "delta-3alpha-beta", "delta-4alpha", "delta-alpha-3beta", "delta-4beta"),
     (0, 0, 1, 1), (1, 1, 2, 2), "0", None),
    ("PL", 11, "Σ2", ("xy", "0", "0"),
     ("alpha", "beta", "gamma"), ("alpha+beta", "delta", "epsilon"),
     ("delta-2alpha", "delta-2beta", "delta-alpha-gamma", "delta-beta-gamma", "delta-2gamma",
      "epsilon-2alpha", "epsilon-2beta", "epsilon-alpha-gamma", "epsilon-beta-gamma", "epsilon-2gamma",
      "alpha+beta-2gamma"), (1, 0, 0, 3, 3), (1, 1, 1, 2, 2), "0", None),
    ("DL", 13, "Σ2", ("x^2", "0", "0"),
     ("alpha", "beta", "gamma"), ("2alpha", "delta", "epsilon"),
     ("delta-alpha-beta", "delta-2beta", "delta-alpha-gamma", "delta-2gamma", "delta-beta-gamma",
      "epsilon-alpha-beta", "epsilon-2beta", "epsilon-alpha-gamma", "epsilon-2gamma", "epsilon-beta-gamma",
      "2alpha-2beta", "2alpha-beta-gamma", "2alpha-2gamma"), (1, 0, 0, 3, 3), (1, 1, 1, 2, 2), "0", None),
    ("0", 18, "zero", ("0", "0", "0"),
     ("alpha", "beta", "gamma"), ("delta", "epsilon", "kappa"),
     (), None, (1, 1, 2, 2, 3, 3), "0", None),
]


def _build(row) -> OrbitRecord:
    name, codim, stratum, rep, u, v, nw, wit, deg, lab, dual = row
    return OrbitRecord(
        name=name,
        codim=codim,
        representative=tuple(parse_quadric(q) for q in rep),
        u_weights=_w(*u),
        v_weights=_w(*v),
        printed_normal_weights=_w(*nw),
        printed_witness=tuple(wit) if wit is not None else None,
        poincare_degrees=tuple(deg),
        delta_label=lab,
        stratum=stratum,
        dual=dual,
    )


ORBITS: tuple[OrbitRecord, ...] = tuple(_build(r) for r in _ROWS)
_BY_NAME = {o.name: o for o in ORBITS}
ALIASES = {"1^4": "(1^4)", "(14)": "(1^4)", "21^2": "(21^2)", "(212)": "(21^2)", "31": "(31)",
           "22": "(22)", "4": "(4)", "Dstar": "D*", "Estar": "E*", "Fstar": "F*", "Gstar": "G*",
           "Istar": "I*", "zero": "0"}


def canonical_name(name: str) -> str:
    if name in _BY_NAME:
        return name
    if name in ALIASES:
        return ALIASES[name]
    raise KeyError(f"unknown orbit {name!r}; known: {', '.join(_BY_NAME)}")


def orbit(name: str, dataset: Sequence[OrbitRecord] | None = None) -> OrbitRecord:
    """Look up a row by name (``D*`` and ``Dstar`` both work)."""
    if dataset is None:
        return _BY_NAME[canonical_name(name)]
    for o in dataset:
        if o.name == name or o.name == ALIASES.get(name):
            return o
    raise KeyError(f"unknown orbit {name!r}")


def orbit_names() -> list[str]:
    return [o.name for o in ORBITS]


# ---------------------------------------------------------------------------
# weights of the representation and the tangent space


def coordinate_weights(o: OrbitRecord) -> list[LinForm]:
    """Weights of the 18 coordinates (component k, monomial m): ``v_k - u(m)``."""
    out = []
    for k in range(3):
        for mono in QUAD_MONOMIALS:
            um = LinForm.of({})
            for i, e in enumerate(mono):
                if e:
                    um = um + o.u_weights[i].scale(e)
            out.append(o.v_weights[k] - um)
    return out


def _mono_index(exp) -> int:
    return QUAD_MONOMIALS.index(tuple(exp))


def tangent_vectors(rep) -> list[list[Fraction]]:
    """Images of the 18 elementary matrices of gl(U) + gl(V) at a net."""
    vecs = []
    # gl(U): derivation x_i d/dx_j on every component
    for i in range(3):
        for j in range(3):
            vec = [Fraction(0)] * 18
            for k, quad in enumerate(rep):
                for mi, c in enumerate(quad):
                    if not c:
                        continue
                    exp = list(QUAD_MONOMIALS[mi])
                    if exp[j] == 0:
                        continue
                    mult = exp[j]
                    exp[j] -= 1
                    exp[i] += 1
                    vec[6 * k + _mono_index(exp)] += c * mult
            vecs.append(vec)
    # gl(V): add component l into component k
    for k in range(3):
        for l in range(3):
            vec = [Fraction(0)] * 18
            for mi, c in enumerate(rep[l]):
                vec[6 * k + mi] += c
            vecs.append(vec)
    return vecs


def is_fixed_by_torus(o: OrbitRecord) -> bool:
    """Every nonzero coordinate of the representative has weight zero."""
    weights = coordinate_weights(o)
    for k, quad in enumerate(o.representative):
        for mi, c in enumerate(quad):
            if c and not weights[6 * k + mi].is_zero():
                return False
    return True


def _rank(vectors: list[list[Fraction]]) -> int:
    if not vectors:
        return 0
    return solve_linear([dict((j, v) for j, v in enumerate(vec) if v) for vec in vectors],
                        None, len(vectors[0])).rank


@lru_cache(maxsize=None)
def _derived(o: OrbitRecord) -> tuple[LinForm, ...]:
    weights = coordinate_weights(o)
    total = Counter(weights)
    tangent: Counter = Counter()
    groups: dict[LinForm, list] = {}
    for vec in tangent_vectors(o.representative):
        support = {weights[j] for j, v in enumerate(vec) if v}
        if not support:
            continue
        if len(support) != 1:
            raise ValueError(f"orbit {o.name}: tangent vector is not a weight vector")
        groups.setdefault(support.pop(), []).append(vec)
    for w, vecs in groups.items():
        tangent[w] = _rank(vecs)
    normal = total - tangent
    out: list[LinForm] = []
    for w in sorted(normal, key=_sort_key, reverse=True):
        out.extend([w] * normal[w])
    return tuple(out)


def derived_normal_weights(o: OrbitRecord) -> tuple[LinForm, ...]:
    return _derived(o)


def tangent_dimension(o: OrbitRecord) -> int:
    return 18 - len(derived_normal_weights(o))


def weight_comparison(o: OrbitRecord) -> dict:
    """Compare printed and derived normal weights as multisets."""
    printed = Counter(o.printed_normal_weights)
    derived = Counter(derived_normal_weights(o))
    return {
        "match": printed == derived,
        "missing_from_print": [w.ascii() for w in (derived - printed).elements()],
        "extra_in_print": [w.ascii() for w in (printed - derived).elements()],
    }


# ---------------------------------------------------------------------------
# restriction maps and Euler classes


def restriction_images(o: OrbitRecord) -> dict[str, Poly]:
    """``u_i -> sigma_i(u_weights)``, ``v_i -> sigma_i(v_weights)`` over the orbit's torus."""
    from .symfun import elem_sym

    t = o.torus_table
    us = [w.to_poly(t) for w in o.u_weights]
    vs = [w.to_poly(t) for w in o.v_weights]
    out = {}
    for i in range(1, 4):
        out[f"u{i}"] = elem_sym(i, us)
        out[f"v{i}"] = elem_sym(i, vs)
    return out


def restriction_map(o: OrbitRecord):
    """The substitution ``P -> P|_{T_o}`` as a callable."""
    images = restriction_images(o)
    table = o.torus_table

    def apply(p: Poly) -> Poly:
        return p.substitute(images, table)

    apply.images = images  # type: ignore[attr-defined]
    apply.table = table  # type: ignore[attr-defined]
    return apply


def euler_class(o: OrbitRecord, weights: Sequence[LinForm] | None = None) -> Poly:
    """Product of the normal weights (derived unless ``weights`` is given)."""
    t = o.torus_table
    ws = derived_normal_weights(o) if weights is None else weights
    out = Poly.const(t, 1)
    for w in ws:
        out = out * w.to_poly(t)
    return out


# ---------------------------------------------------------------------------
# serialisation (``noc orbits --list`` and ``--fixtures``)


def dataset_json(dataset: Sequence[OrbitRecord] | None = None) -> list[dict]:
    return [o.to_json() for o in (dataset or ORBITS)]


def load_dataset(path: str | Path) -> tuple[OrbitRecord, ...]:
    """Read an orbit dataset written by :func:`dataset_json` (``orbits.json``)."""
    p = Path(path)
    if p.is_dir():
        p = p / "orbits.json"
    data = json.loads(p.read_text())
    rows = []
    for d in data:
        rows.append(OrbitRecord(
            name=d["name"],
            codim=int(d["codim"]),
            representative=tuple(parse_quadric(q) for q in d["representative"]),
            u_weights=_w(*d["u_weights"]),
            v_weights=_w(*d["v_weights"]),
            printed_normal_weights=_w(*d.get("printed_normal_weights", [])),
            printed_witness=tuple(d["printed_witness"]) if d.get("printed_witness") is not None else None,
            poincare_degrees=tuple(int(x) for x in d["poincare_degrees"]),
            delta_label=d.get("delta_label", ""),
            stratum=d["stratum"],
            dual=d.get("dual"),
        ))
    return tuple(rows)
