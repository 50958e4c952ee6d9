"""Recoloring procedures that turn a coloring of ``G - e`` into a coloring of ``G``.

Each ``recolor_*`` function follows one structural lemma's extension argument
move for move. The argument is a proof, so the procedures never fall back to
search: if a step that the argument guarantees is impossible, ``ProofFailure``
is raised with the coloring attached.

Notation: ``U(x)`` is the set of colors on vertex ``x`` and its incident
edges; ``h = (kappa - 1) // 2`` is the degree below which an uncolored vertex
can always be colored last.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .coloring import Edge, Element, TotalColoring, Vertex, available, is_valid_total, used_at
from .graph import Graph


class LemmaPreconditionError(ValueError):
    pass


class ListTooSmall(ValueError):
    pass


class OddCycle(ValueError):
    pass


class ProofFailure(AssertionError):
    """A step the argument guarantees did not go through; carries the state."""

    def __init__(self, message: str, coloring: TotalColoring | None = None):
        detail = f"{message}\nstate: {coloring!r}" if coloring is not None else message
        super().__init__(detail)
        self.coloring = coloring


@dataclass
class Recoloring:
    coloring: TotalColoring
    branch: str
    changed: frozenset = field(default_factory=frozenset)


@dataclass
class ProofContradictionWitness:
    """The double exchange ended with U(w2) inside U(w4) and both exchanged colors in U(w4)."""

    used_w2: frozenset
    used_w4: frozenset
    color_ww1: int
    color_ww3: int
    branch: str = "witness"


def _half(kappa: int) -> int:
    return (kappa - 1) // 2


def _require(cond: bool, message: str):
    if not cond:
        raise LemmaPreconditionError(message)


def _check(cond: bool, message: str, c: TotalColoring):
    if not cond:
        raise ProofFailure(message, c)


def _edges(g: Graph, *pairs: tuple[int, int]):
    for a, b in pairs:
        _require(g.has_edge(a, b), f"{a}{b} is not an edge")
    return [Edge(g.edge_id(a, b)) for a, b in pairs]


def _prepare(g: Graph, kappa: int, c: TotalColoring, deleted: Sequence[Edge], erase: Sequence[int]) -> TotalColoring:
    _require(c.kappa == kappa, f"coloring uses kappa={c.kappa}, expected {kappa}")
    for x in deleted:
        _require(x not in c, f"{x!r} must be uncolored")
    erased = {Vertex(v) for v in erase}
    for v in range(g.n):
        _require(Vertex(v) in c or Vertex(v) in erased, f"vertex {v} is uncolored")
    for e in range(g.m):
        _require(Edge(e) in c or Edge(e) in deleted, f"edge {g.edges[e]} is uncolored")
    _require(is_valid_total(g, c), "input coloring is not proper")
    return c.erased(*erased)


def _color_vertices_last(g: Graph, c: TotalColoring, vertices: Iterable[int]) -> TotalColoring:
    """Color low-degree vertices greedily; each forbids at most 2*deg < kappa colors."""
    for v in vertices:
        av = available(g, c, Vertex(v))
        _check(bool(av), f"no color left for vertex {v}", c)
        c = c.with_colors({Vertex(v): min(av)})
    return c


def _finish(g: Graph, before: TotalColoring, c: TotalColoring, branch: str, named: Iterable[Element]) -> Recoloring:
    _check(is_valid_total(g, c), f"branch {branch} produced an improper coloring", c)
    named = frozenset(named)
    for x, k in before.items():
        if x not in named:
            _check(c.get(x) == k, f"{x!r} changed outside the named elements", c)
    changed = frozenset(x for x in c.domain() if before.get(x) != c[x])
    return Recoloring(c, branch, changed)


def _palette(kappa: int) -> frozenset:
    return frozenset(range(1, kappa + 1))


def two_edge_choose_even_cycle(cycle_length: int, lists: Sequence[Iterable[int]]) -> list[int]:
    """Edge ``i`` of the cycle joins edges ``i-1`` and ``i+1``; pick distinct neighbours' colors from lists."""
    if cycle_length % 2:
        raise OddCycle(f"cycle of length {cycle_length} is odd")
    if cycle_length < 4:
        raise ValueError("a cycle in a simple graph has length at least 4 here")
    if len(lists) != cycle_length:
        raise ValueError(f"expected {cycle_length} lists, got {len(lists)}")
    ls = [sorted(set(x)) for x in lists]
    for i, x in enumerate(ls):
        if len(x) < 2:
            raise ListTooSmall(f"list {i} has {len(x)} colors")
    out = [0] * cycle_length

    def rec(i):
        if i == cycle_length:
            return out[-1] != out[0]
        for k in ls[i]:
            if i and out[i - 1] == k:
                continue
            out[i] = k
            if rec(i + 1):
                return True
        return False

    if not rec(0):
        raise ProofFailure(f"even cycle not colorable from lists {ls}")
    return list(out)


# order: u, v, w, uv, vw, wu; a vertex is free only with the opposite edge
_TRIANGLE_FREE = {(0, 4), (1, 5), (2, 3)}


def triangle_total_3_choose(lists: Sequence[Iterable[int]]) -> tuple[int, ...]:
    """Total coloring of a triangle from lists of size at least 3.

    ``lists`` is ordered ``u, v, w, uv, vw, wu``.
    """
    if len(lists) != 6:
        raise ValueError("need six lists")
    ls = [sorted(set(x)) for x in lists]
    for i, x in enumerate(ls):
        if len(x) < 3:
            raise ListTooSmall(f"list {i} has {len(x)} colors")
    conflict = [[(min(i, j), max(i, j)) not in _TRIANGLE_FREE and i != j for j in range(6)] for i in range(6)]
    for combo in itertools.product(*ls):
        if all(combo[i] != combo[j] for i in range(6) for j in range(i + 1, 6) if conflict[i][j]):
            return combo
    raise ProofFailure(f"triangle not totally colorable from {ls}")


def recolor_sumdelta3(g: Graph, kappa: int, u: int, v: int, w: int, c: TotalColoring) -> Recoloring:
    """Triangle ``uvw`` with ``deg(v) <= h``, ``deg(u)+deg(v) <= kappa+1``, ``deg(w) <= kappa-2``.

    ``c`` colors ``G - uv``.
    """
    uv, uw, vw = _edges(g, (u, v), (u, w), (v, w))
    _require(g.degree(v) <= _half(kappa), "deg(v) exceeds (kappa-1)//2")
    _require(g.degree(u) + g.degree(v) <= kappa + 1, "deg(u)+deg(v) exceeds kappa+1")
    _require(g.degree(w) <= kappa - 2, "deg(w) must be at most kappa-2")
    before = c
    phi = _prepare(g, kappa, c, [uv], [v])
    named = [uv, vw, uw, Vertex(v)]
    full = _palette(kappa)

    union = used_at(g, phi, u) | used_at(g, phi, v)
    if union != full:
        out = phi.with_colors({uv: min(full - union)})
        return _finish(g, before, _color_vertices_last(g, out, [v]), "direct", named)

    _check(not (used_at(g, phi, u) & used_at(g, phi, v)), "U(u), U(v) not disjoint", phi)
    _check(phi[vw] not in used_at(g, phi, u), "phi(wv) in U(u)", phi)
    moved = phi.with_colors({uv: phi[vw]}).erased(vw)
    union2 = used_at(g, moved, w) | used_at(g, moved, v)
    if union2 != full:
        out = moved.with_colors({vw: min(full - union2)})
        return _finish(g, before, _color_vertices_last(g, out, [v]), "shift", named)

    _check(used_at(g, phi, u) <= used_at(g, moved, w), "U(u) not inside U(w) after the shift", phi)
    spare = full - (used_at(g, phi, u) | used_at(g, phi, w))
    _check(bool(spare), "no color outside U(u) and U(w)", phi)
    alpha = min(spare)
    _check(phi[uw] not in used_at(g, phi, v), "phi(uw) in U(v)", phi)
    out = phi.with_colors({uw: alpha, uv: phi[uw]})
    return _finish(g, before, _color_vertices_last(g, out, [v]), "alpha", named)


def recolor_2tau(g: Graph, kappa: int, u: int, v: int, w: int, c: TotalColoring) -> Recoloring:
    """Triangle ``uvw`` with ``kappa = 2*tau`` and ``deg(u) = deg(v) = tau``; ``c`` colors ``G - uv``."""
    _require(kappa % 2 == 0, "kappa must be even")
    tau = kappa // 2
    uv, wu, wv = _edges(g, (u, v), (w, u), (w, v))
    _require(g.degree(u) == tau and g.degree(v) == tau, f"uv must be a ({tau},{tau})-edge")
    before = c
    phi = _prepare(g, kappa, c, [uv], [v])
    named = [uv, wu, wv, Vertex(v)]
    a_uv = sorted(available(g, phi, uv))
    a_v = sorted(available(g, phi, Vertex(v)))
    for a1 in a_uv:
        for a2 in a_v:
            if a1 != a2:
                out = phi.with_colors({uv: a1, Vertex(v): a2})
                return _finish(g, before, out, "extend", named)

    _check(len(a_uv) == 1 and a_uv == a_v, "A(uv) and A(v) are not the same singleton", phi)
    alpha = a_uv[0]
    uu, uvv = used_at(g, phi, u), used_at(g, phi, v)
    _check(len(uu | uvv) == kappa - 1 and not (uu & uvv), "U(u), U(v) do not split kappa-1 colors", phi)
    out = phi.with_colors({wu: phi[wv], wv: phi[wu], uv: alpha, Vertex(v): phi[wv]})
    return _finish(g, before, out, "exchange", named)


def recolor_onesmall(g: Graph, kappa: int, w: int, w1: int, w2: int, w3: int, c: TotalColoring) -> Recoloring:
    """``w1, w2, w3`` neighbours of ``w``, ``w1w2`` an edge, ``deg(w)+deg(w1) = kappa+1``,
    ``deg(w1) <= h`` and (the assumption refuted) ``deg(w)+deg(w3) <= kappa+1``.

    ``c`` colors ``G - ww1``.
    """
    _require(len({w, w1, w2, w3}) == 4, "vertices must be distinct")
    ww1, ww2, ww3, w1w2 = _edges(g, (w, w1), (w, w2), (w, w3), (w1, w2))
    _require(g.degree(w) + g.degree(w1) == kappa + 1, "deg(w)+deg(w1) must equal kappa+1")
    _require(g.degree(w1) <= _half(kappa), "deg(w1) exceeds (kappa-1)//2")
    _require(g.degree(w) + g.degree(w3) <= kappa + 1, "deg(w)+deg(w3) must be at most kappa+1")
    before = c
    phi = _prepare(g, kappa, c, [ww1], [w1, w3])
    named = [ww1, ww2, ww3, w1w2, Vertex(w1), Vertex(w3)]
    full = _palette(kappa)
    uw, uw1, uw3 = used_at(g, phi, w), used_at(g, phi, w1), used_at(g, phi, w3)

    if uw | uw1 != full:
        out = phi.with_colors({ww1: min(full - (uw | uw1))})
        return _finish(g, before, _color_vertices_last(g, out, [w1, w3]), "direct", named)
    _check(not (uw & uw1), "U(w), U(w1) not disjoint", phi)

    if uw | uw3 != full:
        out = phi.with_colors({ww1: phi[ww3], ww3: min(full - (uw | uw3))})
        return _finish(g, before, _color_vertices_last(g, out, [w1, w3]), "reassign", named)

    _check(phi[ww2] not in uw3, "phi(ww2) in U(w3)", phi)
    out = phi.with_colors({ww2: phi[w1w2], w1w2: phi[ww2], ww3: phi[ww2], ww1: phi[ww3]})
    return _finish(g, before, _color_vertices_last(g, out, [w1, w3]), "rotate", named)


def recolor_twotriangles(g: Graph, kappa: int, w: int, w1: int, w2: int, w3: int, w4: int,
                         c: TotalColoring) -> Recoloring | ProofContradictionWitness:
    """``ww2`` lies in triangles ``ww1w2`` and ``ww2w3``; ``deg(w)+deg(w2) = kappa+1``,
    ``deg(w2) <= h``; ``w4`` is another neighbour of ``w`` with ``deg(w4) <= h``.

    ``c`` colors ``G - ww2``. When ``deg(w4) <= deg(w2)+1`` the run must
    extend the coloring; otherwise it may end with the containment witness.
    """
    _require(len({w, w1, w2, w3, w4}) == 5, "vertices must be distinct")
    ww1, ww2, ww3, ww4, w1w2, w3w2 = _edges(g, (w, w1), (w, w2), (w, w3), (w, w4), (w1, w2), (w3, w2))
    _require(g.degree(w) + g.degree(w2) == kappa + 1, "deg(w)+deg(w2) must equal kappa+1")
    _require(g.degree(w2) <= _half(kappa), "deg(w2) exceeds (kappa-1)//2")
    _require(g.degree(w4) <= _half(kappa), "deg(w4) exceeds (kappa-1)//2")
    before = c
    phi = _prepare(g, kappa, c, [ww2], [w2, w4])
    named = [ww1, ww2, ww3, ww4, w1w2, w3w2, Vertex(w2), Vertex(w4)]
    full = _palette(kappa)

    def attempt(col: TotalColoring, tag: str):
        uw, uw2, uw4 = used_at(g, col, w), used_at(g, col, w2), used_at(g, col, w4)
        if uw | uw2 != full:
            out = col.with_colors({ww2: min(full - (uw | uw2))})
            return _finish(g, before, _color_vertices_last(g, out, [w2, w4]), tag + "direct", named)
        _check(not (uw & uw2), "U(w), U(w2) not disjoint", col)
        if uw | uw4 != full:
            out = col.with_colors({ww2: col[ww4], ww4: min(full - (uw | uw4))})
            return _finish(g, before, _color_vertices_last(g, out, [w2, w4]), tag + "reassign", named)
        _check(uw2 < uw4, "U(w2) is not a proper subset of U(w4)", col)
        return None

    res = attempt(phi, "")
    if res is not None:
        return res
    sigma = phi.with_colors({ww1: phi[w1w2], w1w2: phi[ww1], ww3: phi[w3w2], w3w2: phi[ww3]})
    _check(is_valid_total(g, sigma), "double exchange is improper", sigma)
    res = attempt(sigma, "exchange-")
    if res is not None:
        return res
    u4 = used_at(g, phi, w4)
    _check(phi[ww1] in u4 and phi[ww3] in u4, "exchanged colors not in U(w4)", sigma)
    if g.degree(w4) <= g.degree(w2) + 1:
        raise ProofFailure(
            f"containment forces deg(w4) >= {g.degree(w2) + 2}, but deg(w4) = {g.degree(w4)}", sigma)
    return ProofContradictionWitness(used_at(g, phi, w2), u4, phi[ww1], phi[ww3])


def recolor_2v_two_triangles(g: Graph, kappa: int, w: int, w1: int, w2: int, w3: int,
                             c: TotalColoring) -> Recoloring:
    """``ww2`` in triangles ``ww2w1`` and ``ww2w3``; ``w1`` a 2-vertex and (refuted) ``deg(w3) <= 3``.

    ``c`` colors ``G - ww1``.
    """
    _require(kappa >= 7, "needs kappa >= 7")
    _require(len({w, w1, w2, w3}) == 4, "vertices must be distinct")
    ww1, ww2, ww3, w1w2, w2w3 = _edges(g, (w, w1), (w, w2), (w, w3), (w1, w2), (w2, w3))
    _require(g.degree(w1) == 2, "w1 must be a 2-vertex")
    _require(g.degree(w3) <= 3, "deg(w3) must be at most 3")
    before = c
    phi = _prepare(g, kappa, c, [ww1], [w1, w3])
    named = [ww1, ww2, ww3, w1w2, Vertex(w1), Vertex(w3)]
    full = _palette(kappa)
    a = phi[w1w2]
    uw = used_at(g, phi, w)

    if uw | {a} != full:
        out = phi.with_colors({ww1: min(full - uw - {a})})
        return _finish(g, before, _color_vertices_last(g, out, [w1, w3]), "direct", named)
    _check(a not in uw, "phi(w1w2) in U(w)", phi)

    if a not in used_at(g, phi, w3):
        out = phi.with_colors({ww1: phi[ww3], ww3: a})
        return _finish(g, before, _color_vertices_last(g, out, [w1, w3]), "swap", named)

    _check(a not in (phi[w2w3], phi[ww3]), "phi(w1w2) on w2w3 or ww3", phi)
    out = phi.with_colors({ww1: phi[ww3], w1w2: phi[ww2], ww2: a, ww3: phi[ww2]})
    return _finish(g, before, _color_vertices_last(g, out, [w1, w3]), "rotate", named)


def _normalizing_permutation(kappa: int, fixed: dict[int, int]) -> dict[int, int]:
    """Bijection on ``1..kappa`` sending each key of ``fixed`` to its value; the rest in order."""
    src = sorted(k for k in range(1, kappa + 1) if k not in fixed)
    dst = sorted(k for k in range(1, kappa + 1) if k not in fixed.values())
    perm = dict(fixed)
    perm.update(zip(src, dst))
    return perm


def recolor_lnet(g: Graph, kappa: int, v: int, v1: int, v2: int, v3: int, u: int, w: int,
                 c: TotalColoring) -> Recoloring:
    """``vv2`` in triangles ``vv1v2`` and ``vv2v3``, ``v2`` a 3-vertex, ``u`` a 2-vertex on ``v`` and ``w``.

    ``c`` colors ``G - uv``. Colors are permuted so that ``vv1, vv2, vv3, uw``
    carry ``1, 2, 3, kappa``; the permutation is undone on the result.
    """
    _require(kappa >= 7, "needs kappa >= 7")
    _require(len({v, v1, v2, v3, u, w}) == 6, "vertices must be distinct")
    uv, uw, vv1, vv2, vv3, v1v2, v2v3 = _edges(g, (u, v), (u, w), (v, v1), (v, v2), (v, v3), (v1, v2), (v2, v3))
    _require(g.degree(v2) == 3, "v2 must be a 3-vertex")
    _require(g.degree(u) == 2, "u must be a 2-vertex")
    before = c
    phi = _prepare(g, kappa, c, [uv], [u, v2])
    named = [uv, vv1, vv2, vv3, v1v2, v2v3, Vertex(u), Vertex(v2)]
    full = _palette(kappa)
    uvset = used_at(g, phi, v)

    if uvset | {phi[uw]} != full:
        out = phi.with_colors({uv: min(full - uvset - {phi[uw]})})
        return _finish(g, before, _color_vertices_last(g, out, [u, v2]), "direct", named)
    _check(phi[uw] not in uvset, "phi(uw) in U(v)", phi)

    if phi[v1v2] != phi[uw] and phi[v2v3] == phi[uw]:
        # mirror: the argument assumes phi(v1v2) = kappa
        v1, v3 = v3, v1
        vv1, vv3 = vv3, vv1
        v1v2, v2v3 = v2v3, v1v2
        mirrored = True
    else:
        mirrored = False
    perm = _normalizing_permutation(kappa, {phi[vv1]: 1, phi[vv2]: 2, phi[vv3]: 3, phi[uw]: kappa})
    inv = {b: a for a, b in perm.items()}
    p = phi.permuted(perm)
    k = kappa
    tag = "mirror-" if mirrored else ""

    if k not in (p[v1v2], p[v2v3]):
        out, branch = p.with_colors({vv2: k, uv: 2}), "a"
    elif p[v2v3] != 1:
        _check(p[v1v2] == k, "expected phi(v1v2) = kappa", p)
        out, branch = p.with_colors({vv1: k, v1v2: 1, uv: 1}), "b"
    else:
        _check(p[v1v2] == k, "expected phi(v1v2) = kappa", p)
        out, branch = p.with_colors({vv1: k, v1v2: 1, v2v3: 3, vv3: 1, uv: 3}), "c"
    out = _color_vertices_last(g, out, [u, v2]).permuted(inv)
    return _finish(g, before, out, tag + branch, named)


def recolor_444(g: Graph, kappa: int, u: int, v: int, w: int, c: TotalColoring) -> Recoloring:
    """Triangle of three 4-vertices; ``c`` colors ``G`` minus the triangle edges."""
    _require(kappa >= 7, "needs kappa >= 7")
    uv, vw, wu = _edges(g, (u, v), (v, w), (w, u))
    _require(all(g.degree(x) == 4 for x in (u, v, w)), "triangle vertices must have degree 4")
    before = c
    phi = _prepare(g, kappa, c, [uv, vw, wu], [u, v, w])
    elems = [Vertex(u), Vertex(v), Vertex(w), uv, vw, wu]
    lists = [sorted(available(g, phi, x)) for x in elems]
    for x, ls in zip(elems, lists):
        _check(len(ls) >= 3, f"{x!r} has only {len(ls)} available colors", phi)
    combo = triangle_total_3_choose(lists)
    out = phi.with_colors(dict(zip(elems, combo)))
    return _finish(g, before, out, "choose", elems)
