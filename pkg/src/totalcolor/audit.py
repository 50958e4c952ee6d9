"""Structural audit of candidate minimal counterexamples and reducibility checks.

A graph ``G`` with ``Delta(G) <= kappa - 1`` that needs more than ``kappa``
colors, while every proper subgraph does not, cannot have any of the local
structures tested here. ``audit`` reports each one found, with witnesses.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import (
    Edge, TotalColoring, TotalGraph, Vertex, _Search, extend_exhaustive, is_valid_total,
    iter_total_colorings,
)
from .graph import Graph, cut_vertices, find_cycle, is_connected

DEFAULT_ENUMERATION_CAP = 10**7


class DefinitionViolated(ValueError):
    """``Delta(G) >= kappa``: the graph is outside the class being audited."""


class ConfigurationError(ValueError):
    pass


class EnumerationCapExceeded(RuntimeError):
    def __init__(self, cap: int):
        super().__init__(f"more than {cap} canonical colorings; refusing to sample")
        self.cap = cap


def half(kappa: int) -> int:
    return (kappa - 1) // 2


# --------------------------------------------------------------------------- configurations

KINDS = ("exact", "atmost", "atleast", "any")
SYMBOLS = ("kappa-1", "halfk", "delta")


@dataclass(frozen=True)
class DegreeConstraint:
    kind: str
    expr: int | str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown constraint kind {self.kind!r}")
        if self.kind == "any":
            if self.expr is not None:
                raise ConfigurationError("'any' takes no bound")
        elif not (isinstance(self.expr, int) or self.expr in SYMBOLS):
            raise ConfigurationError(f"bad bound {self.expr!r}")

    def bound(self, kappa: int, delta: int) -> int | None:
        if self.kind == "any":
            return None
        if isinstance(self.expr, int):
            return self.expr
        return {"kappa-1": kappa - 1, "halfk": half(kappa), "delta": delta}[self.expr]

    def admits(self, degree: int, kappa: int, delta: int) -> bool:
        b = self.bound(kappa, delta)
        if self.kind == "exact":
            return degree == b
        if self.kind == "atmost":
            return degree <= b
        if self.kind == "atleast":
            return degree >= b
        return True

    def __str__(self):
        return self.kind if self.kind == "any" else f"{self.kind} {self.expr}"


ANY = DegreeConstraint("any")


def Exact(d):
    return DegreeConstraint("exact", d)


def AtMost(d):
    return DegreeConstraint("atmost", d)


def AtLeast(d):
    return DegreeConstraint("atleast", d)


@dataclass(frozen=True)
class Configuration:
    """A pattern graph with degree constraints; closed vertices have no edges beyond the pattern."""

    pattern: Graph
    constraints: dict = field(default_factory=dict)
    closed: frozenset = frozenset()
    delete: tuple = ()
    erase: tuple = ()
    name: str = ""

    def __post_init__(self):
        cons = dict(self.constraints)
        for v in self.closed:
            d = self.pattern.degree(v)
            got = cons.setdefault(v, Exact(d))
            if got.kind != "exact" or (isinstance(got.expr, int) and got.expr != d):
                raise ConfigurationError(f"closed vertex {v} must carry exact {d}, has {got}")
        for v in cons:
            if not 0 <= v < self.pattern.n:
                raise ConfigurationError(f"constraint on unknown vertex {v}")
        for u, v in self.delete:
            if not self.pattern.has_edge(u, v):
                raise ConfigurationError(f"deleted pair ({u}, {v}) is not a pattern edge")
        for v in self.erase:
            if not 0 <= v < self.pattern.n:
                raise ConfigurationError(f"erased vertex {v} not in pattern")
        # an explicit "any" says nothing; dropping it keeps equal configurations equal
        cons = {v: c for v, c in cons.items() if c.kind != "any"}
        object.__setattr__(self, "constraints", cons)
        object.__setattr__(self, "closed", frozenset(self.closed))
        object.__setattr__(self, "delete", tuple(tuple(p) for p in self.delete))
        object.__setattr__(self, "erase", tuple(self.erase))

    def constraint(self, v: int) -> DegreeConstraint:
        return self.constraints.get(v, ANY)


# --------------------------------------------------------------------------- matching

def _match(g: Graph, p: Graph, ok) -> list[tuple[int, ...]]:
    """Injective maps of pattern vertices into ``g`` sending edges to edges; ``ok(i, x)`` filters."""
    if p.n == 0:
        return [()]
    # connected pieces first, each grown from its highest-degree vertex
    order: list[int] = []
    seen = set()
    for root in sorted(range(p.n), key=lambda x: (-p.degree(x), x)):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in sorted(p.neighbors(x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    anchor = {}
    back = {}
    pos = {x: i for i, x in enumerate(order)}
    for x in order:
        earlier = [y for y in p.neighbors(x) if pos[y] < pos[x]]
        anchor[x] = min(earlier, key=lambda y: pos[y]) if earlier else None
        back[x] = earlier
    cand = {x: [v for v in range(g.n) if ok(x, v)] for x in order}
    m = [-1] * p.n
    used = set()
    out = []

    def rec(k):
        if k == len(order):
            out.append(tuple(m))
            return
        x = order[k]
        pool = sorted(g.neighbors(m[anchor[x]])) if anchor[x] is not None else cand[x]
        for v in pool:
            if v in used or not ok(x, v):
                continue
            if all(g.has_edge(v, m[y]) for y in back[x]):
                m[x] = v
                used.add(v)
                rec(k + 1)
                used.discard(v)
        m[x] = -1

    rec(0)
    return sorted(out)


def pattern_automorphisms(conf: Configuration) -> list[tuple[int, ...]]:
    """Automorphisms of the pattern that preserve constraints and closedness."""
    p = conf.pattern

    def ok(i, v):
        return (p.degree(i) == p.degree(v) and conf.constraint(i) == conf.constraint(v)
                and (i in conf.closed) == (v in conf.closed))

    return _match(p, p, ok)


def find_configuration(g: Graph, conf: Configuration, kappa: int, delta: int | None = None,
                       up_to_symmetry: bool = True) -> list[tuple[int, ...]]:
    """Occurrences of ``conf`` in ``g``; entry ``i`` is the image of pattern vertex ``i``.

    By default maps differing by a constraint-preserving pattern
    automorphism count once (the lexicographically least is kept).
    """
    if delta is None:
        delta = g.max_degree()
    p = conf.pattern

    def ok(i, v):
        d = g.degree(v)
        if d < p.degree(i):
            return False
        if i in conf.closed and d != p.degree(i):
            return False
        return conf.constraint(i).admits(d, kappa, delta)

    raw = _match(g, p, ok)
    if not up_to_symmetry:
        return raw
    auts = pattern_automorphisms(conf)
    out = []
    for m in raw:
        if all(tuple(m[s[i]] for i in range(p.n)) >= m for s in auts):
            out.append(m)
    return out


# --------------------------------------------------------------------------- host completion

@dataclass(frozen=True)
class Host:
    graph: Graph
    degrees: tuple[int, ...]
    flexible: frozenset
    pattern_size: int
    pattern_edges: frozenset


def host_plan(conf: Configuration, kappa: int, delta: int | None = None) -> Host:
    if delta is None:
        delta = kappa - 1
    p = conf.pattern
    targets = []
    flexible = set()
    for v in range(p.n):
        d0 = p.degree(v)
        c = conf.constraint(v)
        b = c.bound(kappa, delta)
        if c.kind in ("exact", "atmost"):
            t = b
        elif c.kind == "atleast":
            t = max(d0, b)
        else:
            t = d0
        if t < d0:
            raise ConfigurationError(f"vertex {v}: constraint {c} below pattern degree {d0}")
        if t > kappa - 1:
            raise ConfigurationError(f"vertex {v}: degree {t} exceeds kappa-1 = {kappa - 1}")
        if v in conf.closed and t != d0:
            raise ConfigurationError(f"closed vertex {v} must have degree {d0}")
        if c.kind in ("any", "atleast") and t < kappa - 1:
            flexible.add(v)
        targets.append(t)
    edges = list(p.edges)
    n = p.n
    for v in range(p.n):
        for _ in range(targets[v] - p.degree(v)):
            edges.append((v, n))
            n += 1
    g = Graph(n, edges)
    return Host(g, tuple(targets), frozenset(flexible), p.n, frozenset(range(p.m)))


def host_complete(conf: Configuration, kappa: int, delta: int | None = None) -> Graph:
    """Smallest host: pattern plus pendant leaves bringing each vertex to its constrained degree.

    ``atmost d`` is completed to ``d``; ``any`` keeps the pattern degree.
    """
    return host_plan(conf, kappa, delta).graph


# --------------------------------------------------------------------------- reducibility

@dataclass
class Verdict:
    reducible: bool
    colorings_checked: int
    counter: TotalColoring | None = None
    plain_extensions: int = 0

    def __str__(self):
        return "REDUCIBLE" if self.reducible else "COUNTER-COLORING"


def verify_reducible(conf: Configuration, kappa: int, deleted: Sequence[tuple[int, int]] | None = None,
                     erased: Sequence[int] | None = None, cap: int = DEFAULT_ENUMERATION_CAP,
                     prune: bool = True, recolor: bool = True) -> Verdict:
    """Check every coloring of the completed host minus ``deleted`` against extension.

    For each proper ``kappa``-coloring of ``H - deleted`` (one per color
    permutation when ``prune``), the ``erased`` vertices are uncolored and the
    deleted edges plus erased vertices must be colorable again. When plain
    extension fails and ``recolor`` is set, the pattern's own edges and
    vertices may be recolored too; the pendant completion is frozen. A
    flexible vertex (one that may have more edges than the host shows) keeps
    its color, and edges at it may only reuse colors already on its pattern
    edges, so the recoloring stays valid whatever lies beyond the host.
    """
    deleted = list(conf.delete if deleted is None else deleted)
    erased = list(conf.erase if erased is None else erased)
    host = host_plan(conf, kappa)
    g = host.graph
    tg = TotalGraph(g)
    for v in erased:
        if v in host.flexible:
            raise ConfigurationError(f"erased vertex {v} has unbounded degree; give it a bound")
    d_idx = {g.n + g.edge_id(u, v) for u, v in deleted}
    t_idx = d_idx | set(erased)
    r_idx = set()
    if recolor:
        r_idx = {g.n + e for e in host.pattern_edges} - d_idx
        r_idx |= {v for v in range(host.pattern_size) if v not in host.flexible} - set(erased)
    s_idx = t_idx | r_idx
    free = sorted(s_idx)
    rel = set(r_idx)
    for i in s_idx:
        rel.update(tg.nbrs[i])
    rel -= t_idx
    # enumeration order: breadth-first over conflicts so constraints bite early
    order = []
    todo = sorted(rel)
    placed = set()
    while todo:
        start = todo[0]
        queue = [start]
        placed.add(start)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in tg.nbrs[x]:
                if y in rel and y not in placed:
                    placed.add(y)
                    queue.append(y)
        todo = [x for x in todo if x not in placed]
    rest = sorted(set(range(tg.size)) - rel - d_idx)  # irrelevant elements plus erased vertices
    flex_edges = {}
    for y in host.flexible:
        flex_edges[y] = [g.n + e for e in g.incident_edges(y) if (g.n + e) in s_idx]

    # a deleted edge at a flexible vertex may only take a color freed at that vertex
    plain_blocked = any(i in d_idx for es in flex_edges.values() for i in es)
    nb_rel = {i: [j for j in tg.nbrs[i] if j in rel] for i in order}
    col = [0] * tg.size
    count = 0
    plain = 0
    found = None

    def scenario_exists() -> bool:
        s = _Search(tg, kappa, col, rest)
        ok = s.run()
        if ok:
            for i in rest:
                col[i] = s.col[i]
        return ok

    def reducible_here() -> bool:
        nonlocal plain
        work = list(col)
        for i in t_idx:
            work[i] = 0
        if not plain_blocked and _Search(tg, kappa, work, sorted(t_idx)).run():
            plain += 1
            return True
        if not r_idx:
            return False
        allowed = {}
        for y, es in flex_edges.items():
            pal = 0
            for i in es:
                if work[i]:
                    pal |= 1 << (work[i] - 1)
            for i in es:
                allowed[i] = pal
        for i in r_idx:
            work[i] = 0
        return _Search(tg, kappa, work, free, allowed).run()

    def rec(pos: int, maxc: int) -> bool:
        nonlocal count, found
        if pos == len(order):
            saved = [col[i] for i in rest]
            if scenario_exists():
                count += 1
                if count > cap:
                    raise EnumerationCapExceeded(cap)
                if not reducible_here():
                    c = {tg.element(i): col[i] for i in range(tg.size) if col[i] and i not in t_idx}
                    found = TotalColoring(kappa, c)
                    return True
            for i, k in zip(rest, saved):
                col[i] = k
            return False
        i = order[pos]
        taken = 0
        for j in nb_rel[i]:
            if col[j]:
                taken |= 1 << (col[j] - 1)
        top = min(kappa, maxc + 1) if prune else kappa
        for k in range(1, top + 1):
            if taken >> (k - 1) & 1:
                continue
            col[i] = k
            if rec(pos + 1, max(maxc, k)):
                return True
        col[i] = 0
        return False

    rec(0, 0)
    if found is not None:
        return Verdict(False, count, found, plain)
    return Verdict(True, count, None, plain)


# --------------------------------------------------------------------------- audit

@dataclass
class Violation:
    condition: str
    witness: dict
    delete: list = field(default_factory=list)
    erase: list = field(default_factory=list)
    method: str | None = None

    def to_dict(self) -> dict:
        d = {"condition": self.condition, "witness": self.witness}
        if self.method:
            d["reduction"] = {"method": self.method, "delete": [list(e) for e in self.delete],
                              "erase": list(self.erase)}
        return d


@dataclass
class AuditReport:
    kappa: int
    delta: int
    checked: list
    skipped: dict
    violations: list

    @property
    def not_minimal(self) -> bool:
        return bool(self.violations)

    @property
    def overall(self) -> str:
        return "NotMinimal" if self.violations else "MaybeMinimal"

    def by_condition(self) -> dict:
        out = {name: [] for name in self.checked}
        for v in self.violations:
            out[v.condition].append(v)
        return out

    def to_dict(self) -> dict:
        per = self.by_condition()
        return {
            "kappa": self.kappa,
            "delta": self.delta,
            "overall": self.overall,
            "conditions": {
                name: {"holds": not per[name], "violations": [v.to_dict() for v in per[name]]}
                for name in self.checked
            },
            "skipped": dict(self.skipped),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


CONDITIONS = (
    ("two_connected", 0),
    ("dedge", 0),
    ("min_degree", 0),
    ("two_vertex_forest", 5),
    ("sumdelta3", 0),
    ("two_tau", 0),
    ("one_small", 0),
    ("two_triangles", 0),
    ("two_vertex_two_triangles", 7),
    ("no_3_star", 7),
    ("net", 7),
    ("triangle_444", 7),
    ("one_2_neighbor", 11),
)


def _pairs(g: Graph):
    for u, v in g.edges:
        yield u, v
        yield v, u


def check_two_connected(g: Graph, kappa: int):
    if g.n < 3:
        yield Violation("two_connected", {"n": g.n})
        return
    if not is_connected(g):
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        yield Violation("two_connected", {"unreachable_from_0": min(set(range(g.n)) - seen)})
        return
    for x in cut_vertices(g):
        yield Violation("two_connected", {"cut_vertex": x})


def check_dedge(g: Graph, kappa: int):
    h = half(kappa)
    for a, b in g.edges:
        for u, v in ((a, b), (b, a)):
            if g.degree(v) <= h and g.degree(u) + g.degree(v) <= kappa:
                yield Violation("dedge", {"u": u, "v": v}, [(u, v)], [v], "extend")
                break


def check_min_degree(g: Graph, kappa: int):
    bound = kappa - g.max_degree() + 1
    for v in g.vertices():
        d = g.degree(v)
        if d < bound:
            w = {"v": v, "degree": d, "bound": bound}
            if d >= 1 and 2 * d < kappa:
                u = min(g.neighbors(v))
                yield Violation("min_degree", w, [(u, v)], [v], "extend")
            else:
                yield Violation("min_degree", w)


def check_two_vertex_forest(g: Graph, kappa: int):
    twos = {v for v in g.vertices() if g.degree(v) == 2}
    ids = {e for e, (a, b) in enumerate(g.edges) if a in twos or b in twos}
    cyc = find_cycle(g, ids)
    if cyc is None:
        return
    k = len(cyc)
    edges = [(cyc[i], cyc[(i + 1) % k]) for i in range(k)]
    yield Violation("two_vertex_forest", {"cycle": cyc}, edges, sorted(x for x in cyc if x in twos), "extend")


def check_sumdelta3(g: Graph, kappa: int):
    h = half(kappa)
    for u, v in _pairs(g):
        if g.degree(v) <= h and g.degree(u) + g.degree(v) <= kappa + 1:
            for w in g.common_neighbors(u, v):
                if g.degree(w) != kappa - 1:
                    yield Violation("sumdelta3", {"u": u, "v": v, "w": w}, [(u, v)], [v], "recolor_sumdelta3")


def check_two_tau(g: Graph, kappa: int):
    if kappa % 2:
        return
    tau = kappa // 2
    for u, v in g.edges:
        if g.degree(u) == tau and g.degree(v) == tau:
            for w in g.common_neighbors(u, v):
                yield Violation("two_tau", {"u": u, "v": v, "w": w}, [(u, v)], [v], "recolor_2tau")


def check_one_small(g: Graph, kappa: int):
    h = half(kappa)
    for w in g.vertices():
        for w1 in g.neighbors(w):
            if g.degree(w) + g.degree(w1) != kappa + 1 or g.degree(w1) > h:
                continue
            for w2 in g.common_neighbors(w, w1):
                for w3 in sorted(g.neighbors(w)):
                    if w3 in (w1, w2):
                        continue
                    if g.degree(w) + g.degree(w3) <= kappa + 1:
                        yield Violation("one_small", {"w": w, "w1": w1, "w2": w2, "w3": w3},
                                        [(w, w1)], [w1, w3], "recolor_onesmall")


def check_two_triangles(g: Graph, kappa: int):
    h = half(kappa)
    for w in g.vertices():
        for w2 in sorted(g.neighbors(w)):
            if g.degree(w) + g.degree(w2) != kappa + 1 or g.degree(w2) > h:
                continue
            common = g.common_neighbors(w, w2)
            if len(common) < 2:
                continue
            w1, w3 = common[0], common[1]
            need = min(g.degree(w2) + 2, (kappa + 1) // 2)
            for w4 in sorted(g.neighbors(w)):
                if w4 in (w1, w2, w3):
                    continue
                if g.degree(w4) < need:
                    yield Violation("two_triangles", {"w": w, "w1": w1, "w2": w2, "w3": w3, "w4": w4},
                                    [(w, w2)], [w2, w4], "recolor_twotriangles")


def check_two_vertex_two_triangles(g: Graph, kappa: int):
    for w1 in g.vertices():
        if g.degree(w1) != 2:
            continue
        a, b = sorted(g.neighbors(w1))
        if not g.has_edge(a, b):
            continue
        for w, w2 in ((a, b), (b, a)):
            for w3 in g.common_neighbors(w, w2):
                if w3 != w1 and g.degree(w3) <= 3:
                    yield Violation("two_vertex_two_triangles", {"w": w, "w1": w1, "w2": w2, "w3": w3},
                                    [(w, w1)], [w1, w3], "recolor_2v_two_triangles")


def check_no_3_star(g: Graph, kappa: int):
    delta = g.max_degree()
    for u in g.vertices():
        if g.degree(u) != 2:
            continue
        a, b = sorted(g.neighbors(u))
        if not g.has_edge(a, b) or g.degree(a) != delta or g.degree(b) != delta:
            continue
        for v, w in ((a, b), (b, a)):
            for x in sorted(g.neighbors(v)):
                if g.degree(x) != 3:
                    continue
                for y in g.common_neighbors(v, x):
                    if {x, y} != {u, w}:
                        yield Violation("no_3_star", {"u": u, "v": v, "w": w, "x": x, "y": y})


def check_net(g: Graph, kappa: int):
    for v2 in g.vertices():
        if g.degree(v2) != 3:
            continue
        nb = sorted(g.neighbors(v2))
        for v in nb:
            v1, v3 = [x for x in nb if x != v]
            if not (g.has_edge(v, v1) and g.has_edge(v, v3)):
                continue
            for u in sorted(g.neighbors(v)):
                if g.degree(u) != 2 or u in (v1, v3):
                    continue
                w = next(x for x in g.neighbors(u) if x != v)
                wit = {"v": v, "v1": v1, "v2": v2, "v3": v3, "u": u, "w": w}
                if w in (v1, v3):
                    yield Violation("net", wit)
                else:
                    yield Violation("net", wit, [(u, v)], [u, v2], "recolor_lnet")


def check_triangle_444(g: Graph, kappa: int):
    for u, v in g.edges:
        if g.degree(u) != 4 or g.degree(v) != 4:
            continue
        for w in g.common_neighbors(u, v):
            if w > v and g.degree(w) == 4:
                yield Violation("triangle_444", {"u": u, "v": v, "w": w},
                                [(u, v), (v, w), (u, w)], [u, v, w], "extend")


def check_one_2_neighbor(g: Graph, kappa: int):
    for v in g.vertices():
        twos = sorted(x for x in g.neighbors(v) if g.degree(x) == 2)
        if len(twos) > 1:
            yield Violation("one_2_neighbor", {"v": v, "two_vertices": twos})


_CHECKS = {
    "two_connected": check_two_connected,
    "dedge": check_dedge,
    "min_degree": check_min_degree,
    "two_vertex_forest": check_two_vertex_forest,
    "sumdelta3": check_sumdelta3,
    "two_tau": check_two_tau,
    "one_small": check_one_small,
    "two_triangles": check_two_triangles,
    "two_vertex_two_triangles": check_two_vertex_two_triangles,
    "no_3_star": check_no_3_star,
    "net": check_net,
    "triangle_444": check_triangle_444,
    "one_2_neighbor": check_one_2_neighbor,
}


def audit(g: Graph, kappa: int) -> AuditReport:
    delta = g.max_degree()
    if delta >= kappa:
        raise DefinitionViolated(f"maximum degree {delta} is not at most kappa - 1 = {kappa - 1}")
    checked, skipped, found = [], {}, []
    for name, min_kappa in CONDITIONS:
        if kappa < min_kappa:
            skipped[name] = f"needs kappa >= {min_kappa}"
            continue
        checked.append(name)
        found.extend(_CHECKS[name](g, kappa))
    return AuditReport(kappa, delta, checked, skipped, found)


def recheck(g: Graph, kappa: int, violation: Violation) -> bool:
    """Re-evaluate a violation's predicate on its witness alone."""
    w = violation.witness
    deg = g.degree
    h = half(kappa)
    name = violation.condition
    if name == "two_connected":
        if "n" in w:
            return g.n < 3
        if "cut_vertex" in w:
            return w["cut_vertex"] in cut_vertices(g)
        return not is_connected(g)
    if name == "dedge":
        return g.has_edge(w["u"], w["v"]) and deg(w["v"]) <= h and deg(w["u"]) + deg(w["v"]) <= kappa
    if name == "min_degree":
        return deg(w["v"]) < kappa - g.max_degree() + 1
    if name == "two_vertex_forest":
        cyc = w["cycle"]
        k = len(cyc)
        return k >= 3 and len(set(cyc)) == k and all(
            g.has_edge(cyc[i], cyc[(i + 1) % k]) and 2 in (deg(cyc[i]), deg(cyc[(i + 1) % k])) for i in range(k))
    if name == "sumdelta3":
        u, v, x = w["u"], w["v"], w["w"]
        return (g.has_edge(u, v) and g.has_edge(u, x) and g.has_edge(v, x) and deg(v) <= h
                and deg(u) + deg(v) <= kappa + 1 and deg(x) != kappa - 1)
    if name == "two_tau":
        u, v, x = w["u"], w["v"], w["w"]
        return (kappa % 2 == 0 and deg(u) == deg(v) == kappa // 2
                and g.has_edge(u, v) and g.has_edge(u, x) and g.has_edge(v, x))
    if name == "one_small":
        c, a, b, d = w["w"], w["w1"], w["w2"], w["w3"]
        return (len({c, a, b, d}) == 4 and all(g.has_edge(c, x) for x in (a, b, d)) and g.has_edge(a, b)
                and deg(c) + deg(a) == kappa + 1 and deg(a) <= h and deg(c) + deg(d) <= kappa + 1)
    if name == "two_triangles":
        c, a, b, d, e = w["w"], w["w1"], w["w2"], w["w3"], w["w4"]
        return (len({c, a, b, d, e}) == 5 and all(g.has_edge(c, x) for x in (a, b, d, e))
                and g.has_edge(a, b) and g.has_edge(b, d) and deg(c) + deg(b) == kappa + 1 and deg(b) <= h
                and deg(e) < min(deg(b) + 2, (kappa + 1) // 2))
    if name == "two_vertex_two_triangles":
        c, a, b, d = w["w"], w["w1"], w["w2"], w["w3"]
        return (len({c, a, b, d}) == 4 and deg(a) == 2 and all(g.has_edge(*p) for p in
                ((c, a), (c, b), (a, b), (c, d), (b, d))) and deg(d) <= 3)
    if name == "no_3_star":
        u, v, x, p, q = w["u"], w["v"], w["w"], w["x"], w["y"]
        dl = g.max_degree()
        return (deg(u) == 2 and deg(v) == dl and deg(x) == dl and deg(p) == 3
                and all(g.has_edge(*e) for e in ((u, v), (u, x), (v, x), (v, p), (v, q), (p, q)))
                and {p, q} != {u, x})
    if name == "net":
        v, a, b, d, u, x = (w[k] for k in ("v", "v1", "v2", "v3", "u", "w"))
        return (deg(b) == 3 and deg(u) == 2 and all(g.has_edge(*e) for e in
                ((v, a), (v, b), (v, d), (a, b), (b, d), (u, v), (u, x))) and len({v, a, b, d, u}) == 5)
    if name == "triangle_444":
        u, v, x = w["u"], w["v"], w["w"]
        return all(deg(y) == 4 for y in (u, v, x)) and g.has_edge(u, v) and g.has_edge(v, x) and g.has_edge(u, x)
    if name == "one_2_neighbor":
        return len(w["two_vertices"]) > 1 and all(deg(x) == 2 and g.has_edge(w["v"], x) for x in w["two_vertices"])
    raise KeyError(name)


def confirm_violation(g: Graph, kappa: int, violation: Violation, cap: int = DEFAULT_ENUMERATION_CAP) -> bool:
    """Check a reduction-backed violation against every coloring of ``G`` minus the deleted edges.

    ``extend`` reductions must be completed by ``extend_exhaustive`` after
    erasing; ``recolor_*`` reductions by the named procedure. Returns False
    for violations without a reduction.
    """
    from . import lemmas

    if violation.method is None:
        return False
    dele = [Edge(g.edge_id(u, v)) for u, v in violation.delete]
    ers = [Vertex(v) for v in violation.erase]
    w = violation.witness
    tg = TotalGraph(g)
    count = 0
    for arr in iter_total_colorings(g, kappa, skip=dele):
        count += 1
        if count > cap:
            raise EnumerationCapExceeded(cap)
        c = TotalColoring(kappa, {tg.element(i): k for i, k in enumerate(arr) if k})
        if violation.method == "extend":
            out = extend_exhaustive(g, kappa, c.erased(*ers), dele + ers)
            if out is None or not is_valid_total(g, out):
                return False
            continue
        proc = getattr(lemmas, violation.method)
        if violation.method == "recolor_sumdelta3":
            res = proc(g, kappa, w["u"], w["v"], w["w"], c)
        elif violation.method == "recolor_2tau":
            res = proc(g, kappa, w["u"], w["v"], w["w"], c)
        elif violation.method == "recolor_onesmall":
            res = proc(g, kappa, w["w"], w["w1"], w["w2"], w["w3"], c)
        elif violation.method == "recolor_twotriangles":
            res = proc(g, kappa, w["w"], w["w1"], w["w2"], w["w3"], w["w4"], c)
        elif violation.method == "recolor_2v_two_triangles":
            res = proc(g, kappa, w["w"], w["w1"], w["w2"], w["w3"], c)
        elif violation.method == "recolor_lnet":
            res = proc(g, kappa, w["v"], w["v1"], w["v2"], w["v3"], w["u"], w["w"], c)
        else:
            raise KeyError(violation.method)
        if not isinstance(res, lemmas.Recoloring) or not is_valid_total(g, res.coloring):
            return False
    return count > 0
