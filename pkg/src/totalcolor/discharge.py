"""Charge redistribution over an embedded graph, with exact rational bookkeeping.

Elements are labelled ``v<i>`` for vertices and ``f<j>`` for faces (face
indices as produced by :func:`trace_faces`). Every vertex and face starts
with ``deg - 4``.
"""

from __future__ import annotations

import enum
import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from .audit import DefinitionViolated
from .embedding import Embedding, Face, TwoVertexKind, classify_2_vertex, euler_genus

Charge = Fraction

REGIME_KAPPA = 11


class NotPlaneOrTorus(ValueError):
    pass


class FaceClass(enum.Enum):
    R1 = "(4-,8+,8+)"
    R2 = "(5,7+,7+)"
    R3 = "(6+,6+,6+)"
    OTHER_TRIANGLE = "3-face"
    QUAD = "4-face"
    LARGE = "5+-face"


def vlabel(v: int) -> str:
    return f"v{v}"


def flabel(f: int) -> str:
    return f"f{f}"


def _label_key(label: str):
    return (label[0], int(label[1:]))


def fmt(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s: str) -> Fraction:
    if not re.fullmatch(r"-?\d+/\d+", s):
        raise ValueError(f"not a p/q rational: {s!r}")
    return Fraction(s)


@dataclass
class ChargeLedger:
    initial: dict[str, Fraction]
    transfers: list[tuple[str, str, str, Fraction]] = field(default_factory=list)

    def final(self) -> dict[str, Fraction]:
        out = dict(self.initial)
        for _, src, dst, amt in self.transfers:
            out[src] -= amt
            out[dst] += amt
        return out

    def total_initial(self) -> Fraction:
        return sum(self.initial.values(), Fraction(0))

    def total_final(self) -> Fraction:
        return sum(self.final().values(), Fraction(0))


def initial_charges(emb: Embedding) -> ChargeLedger:
    g = emb.graph
    init = {vlabel(v): Fraction(g.degree(v) - 4) for v in range(g.n)}
    for f in emb.faces():
        init[flabel(f.index)] = Fraction(f.degree - 4)
    return ChargeLedger(init)


def check_euler_identity(emb: Embedding) -> Fraction:
    """Total initial charge; it must be -8 on the sphere and 0 on the torus."""
    genus = euler_genus(emb)
    residue = initial_charges(emb).total_initial()
    if genus > 1 or residue not in (-8, 0):
        raise NotPlaneOrTorus(f"genus {genus} embedding has residue {residue}")
    return residue


def classify_face(emb: Embedding, f: Face, degrees) -> FaceClass:
    """Class of a face from its degree and the degrees of its boundary vertices.

    ``degrees`` is indexable by vertex id. 3-face patterns are tried in the
    order R1, R2, R3.
    """
    if f.degree >= 5:
        return FaceClass.LARGE
    if f.degree == 4:
        return FaceClass.QUAD
    d = sorted(degrees[v] for v in f.vertices())
    if len(d) != 3:
        return FaceClass.OTHER_TRIANGLE
    if d[0] <= 4 and d[1] >= 8:
        return FaceClass.R1
    if d[0] == 5 and d[1] >= 7:
        return FaceClass.R2
    if d[0] >= 6:
        return FaceClass.R3
    return FaceClass.OTHER_TRIANGLE


_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)
_FIFTH = Fraction(1, 5)


def apply_rules(emb: Embedding, kappa: int) -> ChargeLedger:
    g = emb.graph
    if g.n and g.max_degree() >= kappa:
        raise DefinitionViolated(f"maximum degree {g.max_degree()} >= kappa = {kappa}")
    ledger = initial_charges(emb)
    deg = [g.degree(v) for v in range(g.n)]
    acc: dict[tuple[str, str, str], Fraction] = defaultdict(Fraction)

    for f in emb.faces():
        fl = flabel(f.index)
        cls = classify_face(emb, f, deg)
        # boundary occurrences, so a repeated vertex pays once per incidence
        for v in f.vertices():
            if cls is FaceClass.R1 and deg[v] >= 8:
                acc[("R1", vlabel(v), fl)] += _HALF
            elif cls is FaceClass.R2:
                if deg[v] == 5:
                    acc[("R2", vlabel(v), fl)] += _FIFTH
                elif deg[v] >= 7:
                    acc[("R2", vlabel(v), fl)] += 2 * _FIFTH
            elif cls is FaceClass.R3:
                acc[("R3", vlabel(v), fl)] += _THIRD
            if cls is FaceClass.LARGE and deg[v] == 2:
                acc[("R5", fl, vlabel(v))] += 1

    for w in range(g.n):
        if deg[w] == 2:
            share = Fraction(1) if classify_2_vertex(emb, w) is TwoVertexKind.BAD else _HALF
            for u in g.neighbors(w):
                acc[("R4", vlabel(u), vlabel(w))] += share
        if deg[w] == 3:
            for u in g.neighbors(w):
                acc[("R6", vlabel(u), vlabel(w))] += _THIRD

    keys = sorted(acc, key=lambda k: (k[0], _label_key(k[1]), _label_key(k[2])))
    ledger.transfers = [(r, s, t, acc[(r, s, t)]) for r, s, t in keys]
    return ledger


@dataclass
class ChargeReport:
    kappa: int
    residue: Fraction
    initial: dict[str, Fraction]
    final: dict[str, Fraction]
    transfers: list[tuple[str, str, str, Fraction]]
    min_final: Fraction
    negative_elements: list[dict]
    max_degree_positive: bool
    outside_regime: bool

    @property
    def ok(self) -> bool:
        return not self.negative_elements and self.residue in (-8, 0)

    def to_dict(self) -> dict:
        order = sorted(self.initial, key=_label_key)
        return {
            "kappa": self.kappa,
            "residue": fmt(self.residue),
            "outside_regime": self.outside_regime,
            "min_final": fmt(self.min_final),
            "max_degree_positive": self.max_degree_positive,
            "negative_elements": self.negative_elements,
            "elements": [{"id": x, "initial": fmt(self.initial[x]), "final": fmt(self.final[x])} for x in order],
            "transfers": [{"rule": r, "from": s, "to": t, "amount": fmt(a)} for r, s, t, a in self.transfers],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _local_structure(emb: Embedding, label: str) -> dict:
    g = emb.graph
    idx = int(label[1:])
    if label[0] == "v":
        return {
            "id": label,
            "degree": g.degree(idx),
            "neighbor_degrees": sorted(g.degree(u) for u in g.neighbors(idx)),
            "face_degrees": [f.degree for _, _, f in emb.corners(idx)],
        }
    f = emb.faces()[idx]
    return {"id": label, "degree": f.degree, "vertex_degrees": [g.degree(v) for v in f.vertices()]}


def final_report(ledger: ChargeLedger, emb: Embedding, kappa: int) -> ChargeReport:
    g = emb.graph
    final = ledger.final()
    total = ledger.total_initial()
    assert sum(final.values(), Fraction(0)) == total, "charge not conserved"
    negatives = sorted((x for x, c in final.items() if c < 0), key=_label_key)
    neg = [dict(_local_structure(emb, x), final=fmt(final[x])) for x in negatives]
    delta = g.max_degree() if g.n else 0
    top = [v for v in range(g.n) if g.degree(v) == delta]
    return ChargeReport(
        kappa=kappa,
        residue=total,
        initial=dict(ledger.initial),
        final=final,
        transfers=list(ledger.transfers),
        min_final=min(final.values()) if final else Fraction(0),
        negative_elements=neg,
        max_degree_positive=all(final[vlabel(v)] > 0 for v in top),
        outside_regime=kappa < REGIME_KAPPA,
    )


def discharge(emb: Embedding, kappa: int) -> ChargeReport:
    """Euler check, all rules, and the final report in one call."""
    check_euler_identity(emb)
    return final_report(apply_rules(emb, kappa), emb, kappa)
