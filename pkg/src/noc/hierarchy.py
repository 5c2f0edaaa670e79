"""Positivity of orbits, incidence by restricted classes, and the adjacency graph.

An orbit is positive when some linear functional on its torus weight space
is strictly positive on every normal weight.  For a positive orbit ``v``
the closure of ``eta`` contains ``v`` exactly when the class of ``eta``
restricts to a nonzero polynomial on the stabiliser torus of ``v``.

The semistable orbits D, D*, E, E* are not positive.  Their incoming edges
come from the k-invariant: the codimension-one orbit with the same k value
(B = A_1 for D and E, B* = A_4 for D* and E*).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .exactalg import Poly, format_rational
from .orbitdata import ORBITS, LinForm, OrbitRecord, orbit, restriction_map

__all__ = [
    "PositivityWitness",
    "NotPositive",
    "find_positive_functional",
    "positivity",
    "verify_printed_witness",
    "incident",
    "restricted_class",
    "AdjacencyGraph",
    "build_hierarchy",
    "FAMILY_NODES",
    "SEMISTABLE_K",
]


# ---------------------------------------------------------------------------
# strict homogeneous feasibility by Fourier-Motzkin


def _primitive(vec: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Positive rescaling to coprime integers (keeps the inequality direction)."""
    den = 1
    for c in vec:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in vec]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    if g == 0:
        return tuple(Fraction(0) for _ in vec)
    return tuple(Fraction(c // g) for c in ints)


def _fm(rows: list[tuple[Fraction, ...]], n: int) -> list[Fraction] | None:
    """Solve ``r . x > 0`` for every row, or return None when infeasible."""
    rows = list(dict.fromkeys(_primitive(r) for r in rows))
    if any(all(c == 0 for c in r) for r in rows):
        return None
    if n == 0:
        return []
    k = n - 1
    pos = [r for r in rows if r[k] > 0]
    neg = [r for r in rows if r[k] < 0]
    rest = [r[:k] for r in rows if r[k] == 0]
    for p in pos:
        for q in neg:
            rest.append(tuple(-q[k] * a + p[k] * b for a, b in zip(p[:k], q[:k])))
    sub = _fm(rest, k)
    if sub is None:
        return None
    # x_k > -(p_rest . x) / p_k  and  x_k < (q_rest . x) / -q_k
    lo = [-sum(a * x for a, x in zip(p[:k], sub)) / p[k] for p in pos]
    hi = [sum(a * x for a, x in zip(q[:k], sub)) / -q[k] for q in neg]
    if lo and hi:
        val = (max(lo) + min(hi)) / 2
    elif lo:
        val = max(lo) + 1
    elif hi:
        val = min(hi) - 1
    else:
        val = Fraction(0)
    return sub + [val]


def find_positive_functional(forms: Sequence[Sequence[Fraction]]) -> list[Fraction] | None:
    """A rational ``x`` with ``f . x > 0`` for each coefficient vector ``f``, scaled to small integers."""
    if not forms:
        return None
    n = len(forms[0])
    x = _fm([tuple(Fraction(c) for c in f) for f in forms], n)
    if x is None:
        return None
    return list(_primitive(x)) if any(x) else x


# ---------------------------------------------------------------------------
# positivity of an orbit


@dataclass
class PositivityWitness:
    orbit: str
    params: tuple[str, ...]
    values: tuple[Fraction, ...]
    weight_values: tuple[Fraction, ...]
    source: str  # "tabulated" or "search"

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.params, self.values))

    def to_json(self) -> dict:
        return {"orbit": self.orbit, "positive": True, "source": self.source,
                "phi": {p: format_rational(v) for p, v in zip(self.params, self.values)},
                "weight_values": [format_rational(v) for v in self.weight_values]}


@dataclass
class NotPositive:
    orbit: str
    reason: str

    def to_json(self) -> dict:
        return {"orbit": self.orbit, "positive": False, "reason": self.reason}

    def __bool__(self):
        return False


@dataclass
class WitnessCheck:
    orbit: str
    witness: tuple[int, ...]
    ok: bool
    values: tuple  # one entry per weight: Fraction, or None if the weight uses an unassigned parameter
    printed_ok: bool  # the same functional on the printed weight list

    def detail(self) -> str:
        shown = ", ".join("?" if v is None else str(v) for v in self.values)
        return f"{self.orbit}: phi = {self.witness} gives ({shown})"


def _evaluate(w: LinForm, values: dict) -> Fraction | None:
    if not w.params() <= set(values):
        return None
    return w.evaluate(values)


def verify_printed_witness(o: OrbitRecord) -> WitnessCheck | None:
    """Evaluate the tabulated functional on the (derived) normal weights."""
    if o.printed_witness is None:
        return None
    values = dict(zip(o.params, o.printed_witness))
    got = tuple(_evaluate(w, values) for w in o.normal_weights)
    printed = tuple(_evaluate(w, values) for w in o.printed_normal_weights)
    ok = all(v is not None and v > 0 for v in got)
    printed_ok = all(v is not None and v > 0 for v in printed)
    return WitnessCheck(o.name, tuple(o.printed_witness), ok, got, printed_ok)


def positivity(o: OrbitRecord | str, use_printed: bool = True):
    """A :class:`PositivityWitness` or :class:`NotPositive`.

    The tabulated functional is tried first; if it fails (or there is none)
    the answer comes from Fourier-Motzkin elimination.
    """
    if isinstance(o, str):
        o = orbit(o)
    weights = o.normal_weights
    if use_printed:
        chk = verify_printed_witness(o)
        if chk is not None and chk.ok:
            return PositivityWitness(o.name, o.params, tuple(Fraction(c) for c in chk.witness),
                                     chk.values, "tabulated")
    forms = [[Fraction(w.as_dict().get(p, 0)) for p in o.params] for w in weights]
    x = find_positive_functional(forms)
    if x is None:
        return NotPositive(o.name, "a nonnegative combination of the normal weights vanishes")
    vals = dict(zip(o.params, x))
    return PositivityWitness(o.name, o.params, tuple(x),
                             tuple(w.evaluate(vals) for w in weights), "search")


# ---------------------------------------------------------------------------
# incidence


FAMILY_NODES = ("A_mu", "A_inf", "B", "B*")
# k-values of the semistable nodes; None for the generic member of the family
SEMISTABLE_K = {"A_mu": None, "A_inf": Fraction(0), "B": Fraction(1), "B*": Fraction(4),
                "D": Fraction(1), "E": Fraction(1), "D*": Fraction(4), "E*": Fraction(4)}


def _node_class(name: str, dataset: Sequence[OrbitRecord] | None = None) -> Poly:
    from .resolver import class_Amu, orbit_class, solve_class

    if name in ("A_mu", "B", "B*"):
        return class_Amu("finite")
    if name == "A_inf":
        return class_Amu("infinity")
    if dataset is None:
        return orbit_class(name)
    return solve_class(name, dataset).poly


def _node_codim(name: str) -> int:
    return 1 if name in FAMILY_NODES else orbit(name).codim


def restricted_class(eta: str | Poly, v: OrbitRecord | str, dataset=None) -> Poly:
    """The class of ``eta`` restricted to the stabiliser torus of ``v``."""
    if isinstance(v, str):
        v = orbit(v, dataset)
    cls = eta if isinstance(eta, Poly) else _node_class(eta, dataset)
    return restriction_map(v)(cls)


def incident(eta: str | Poly, v: OrbitRecord | str, dataset=None) -> bool:
    """Whether ``v`` lies in the closure of ``eta``; ``v`` must be positive."""
    if isinstance(v, str):
        v = orbit(v, dataset)
    if not positivity(v):
        raise ValueError(f"orbit {v.name} is not positive; restriction does not decide incidence")
    return not restricted_class(eta, v, dataset).is_zero()


# ---------------------------------------------------------------------------
# the graph


@dataclass
class AdjacencyGraph:
    nodes: list[str]
    codim: dict[str, int]
    edges: set[tuple[str, str]] = field(default_factory=set)
    edge_source: dict[tuple[str, str], str] = field(default_factory=dict)
    flagged: list[tuple[str, str, str]] = field(default_factory=list)
    k_values: dict[str, Fraction | None] = field(default_factory=dict)

    def add(self, a: str, b: str, why: str):
        self.edges.add((a, b))
        self.edge_source.setdefault((a, b), why)

    def sorted_edges(self) -> list[tuple[str, str]]:
        order = {n: i for i, n in enumerate(self.nodes)}
        return sorted(self.edges, key=lambda e: (order[e[0]], order[e[1]]))

    def successors(self, a: str) -> list[str]:
        return [b for x, b in self.sorted_edges() if x == a]

    def transitivity_violations(self) -> list[tuple[str, str, str]]:
        out = []
        for a, b in self.sorted_edges():
            for c in self.successors(b):
                if (a, c) not in self.edges:
                    out.append((a, b, c))
        return out

    def codim_violations(self) -> list[tuple[str, str]]:
        return [(a, b) for a, b in self.sorted_edges() if self.codim[a] >= self.codim[b]]

    def covering_edges(self) -> list[tuple[str, str]]:
        """Edges not implied by a two-step path (the Hasse diagram)."""
        out = []
        for a, b in self.sorted_edges():
            if not any((a, m) in self.edges and (m, b) in self.edges for m in self.nodes):
                out.append((a, b))
        return out

    def to_json(self) -> dict:
        return {
            "nodes": [{"name": n, "codim": self.codim[n],
                       **({"k": None if self.k_values[n] is None else format_rational(self.k_values[n])}
                          if n in self.k_values else {})} for n in self.nodes],
            "edges": [{"from": a, "to": b, "by": self.edge_source[(a, b)]} for a, b in self.sorted_edges()],
            "flagged": [{"from": a, "to": b, "note": note} for a, b, note in self.flagged],
        }

    def to_dot(self, covering: bool = True) -> str:
        lines = ["digraph hierarchy {", "  rankdir=TB;"]
        by_codim: dict[int, list[str]] = {}
        for n in self.nodes:
            by_codim.setdefault(self.codim[n], []).append(n)
        for c in sorted(by_codim):
            names = " ".join(json.dumps(n) for n in by_codim[c])
            lines.append(f"  {{ rank=same; {names} }}  // codim {c}")
        edges = self.covering_edges() if covering else self.sorted_edges()
        for a, b in edges:
            style = "" if self.edge_source[(a, b)] == "restriction" else " [style=dashed]"
            lines.append(f"  {json.dumps(a)} -> {json.dumps(b)}{style};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_hierarchy(dataset: Sequence[OrbitRecord] | None = None) -> AdjacencyGraph:
    """Edges by restriction for positive targets, by k-value for the semistable ones."""
    rows = list(dataset or ORBITS)
    classes: dict[str, Poly] = {}

    def cls(name: str) -> Poly:
        if name not in classes:
            classes[name] = _node_class(name, dataset)
        return classes[name]

    nodes = list(FAMILY_NODES) + [o.name for o in rows]
    codim = {n: _node_codim(n) for n in FAMILY_NODES}
    codim.update({o.name: o.codim for o in rows})
    g = AdjacencyGraph(nodes, codim, k_values={n: k for n, k in SEMISTABLE_K.items() if n in codim})

    positive = {o.name: bool(positivity(o)) for o in rows}
    for v in rows:
        if not positive[v.name]:
            continue
        for eta in nodes:
            if codim[eta] >= v.codim:
                continue
            if not restriction_map(v)(cls(eta)).is_zero():
                g.add(eta, v.name, "restriction")

    # semistable targets: the family member with the same k-value
    for x in ("D", "E", "D*", "E*"):
        if x not in codim:
            continue
        src = "B" if SEMISTABLE_K[x] == 1 else "B*"
        g.add(src, x, "k-invariant")

    # pairs between non-positive orbits that neither mechanism settles
    semis = [n for n in ("D", "D*", "E", "E*") if n in codim and not positive.get(n, False)]
    for a in semis:
        for b in semis:
            if codim[a] < codim[b] and (a, b) not in g.edges:
                if SEMISTABLE_K[a] == SEMISTABLE_K[b]:
                    g.flagged.append((a, b, "equal k; not decided by restriction or k-invariant"))

    for n in nodes:
        if n != "0" and "0" in codim and (n, "0") not in g.edges:
            g.add(n, "0", "cone point")
    return g
