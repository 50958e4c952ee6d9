"""Total colorings: validity, used-color sets, exhaustive extension and the exact solver."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .graph import Graph

DEFAULT_ELEMENT_CAP = 40


@dataclass(frozen=True)
class Vertex:
    id: int

    def __repr__(self):
        return f"V{self.id}"


@dataclass(frozen=True)
class Edge:
    id: int

    def __repr__(self):
        return f"E{self.id}"


Element = Union[Vertex, Edge]


def element_key(x: Element) -> tuple[int, int]:
    return (0, x.id) if isinstance(x, Vertex) else (1, x.id)


class ForeignElement(ValueError):
    pass


class InstanceTooLarge(ValueError):
    def __init__(self, elements: int, cap: int):
        super().__init__(f"instance has {elements} elements, cap is {cap}")
        self.elements = elements
        self.cap = cap


class TotalColoring:
    """A partial assignment of colors ``1..kappa`` to vertices and edges.

    Instances are never mutated; ``with_colors`` and ``erased`` return copies.
    """

    __slots__ = ("kappa", "_a")

    def __init__(self, kappa: int, assignment: Mapping[Element, int] | None = None):
        self.kappa = kappa
        a = dict(assignment or {})
        for x, col in a.items():
            if not isinstance(x, (Vertex, Edge)):
                raise TypeError(f"not an element: {x!r}")
            if not 1 <= col <= kappa:
                raise ValueError(f"color {col} on {x!r} is outside 1..{kappa}")
        self._a = a

    def __getitem__(self, x: Element) -> int:
        return self._a[x]

    def get(self, x: Element, default=None):
        return self._a.get(x, default)

    def __contains__(self, x) -> bool:
        return x in self._a

    def __len__(self):
        return len(self._a)

    def items(self):
        return sorted(self._a.items(), key=lambda kv: element_key(kv[0]))

    def domain(self) -> list[Element]:
        return sorted(self._a, key=element_key)

    def as_dict(self) -> dict[Element, int]:
        return dict(self._a)

    def with_colors(self, updates: Mapping[Element, int]) -> TotalColoring:
        a = dict(self._a)
        a.update(updates)
        return TotalColoring(self.kappa, a)

    def erased(self, *elements: Element) -> TotalColoring:
        a = dict(self._a)
        for x in elements:
            a.pop(x, None)
        return TotalColoring(self.kappa, a)

    def restricted(self, keep: Iterable[Element]) -> TotalColoring:
        keep = set(keep)
        return TotalColoring(self.kappa, {x: c for x, c in self._a.items() if x in keep})

    def permuted(self, perm: Mapping[int, int]) -> TotalColoring:
        return TotalColoring(self.kappa, {x: perm[c] for x, c in self._a.items()})

    def __eq__(self, other):
        return isinstance(other, TotalColoring) and self.kappa == other.kappa and self._a == other._a

    def __hash__(self):
        return hash((self.kappa, tuple(self.items())))

    def __repr__(self):
        return f"TotalColoring(kappa={self.kappa}, {dict(self.items())})"

    # convenience accessors for the proofs, which name edges by endpoints
    def v(self, v: int):
        return self._a.get(Vertex(v))

    def e(self, g: Graph, u: int, v: int):
        return self._a.get(Edge(g.edge_id(u, v)))


def all_elements(g: Graph) -> list[Element]:
    return [Vertex(v) for v in range(g.n)] + [Edge(e) for e in range(g.m)]


def conflicts(g: Graph, x: Element) -> list[Element]:
    """Elements adjacent or incident to ``x``."""
    if isinstance(x, Vertex):
        return [Vertex(w) for w in g.neighbors(x.id)] + [Edge(e) for e in g.incident_edges(x.id)]
    a, b = g.edges[x.id]
    out: list[Element] = [Vertex(a), Vertex(b)]
    out += [Edge(e) for e in g.incident_edges(a) if e != x.id]
    out += [Edge(e) for e in g.incident_edges(b) if e != x.id]
    return out


class TotalGraph:
    """Conflict graph on dense element indices: vertex ``v`` -> ``v``, edge ``e`` -> ``n + e``."""

    def __init__(self, g: Graph):
        self.g = g
        self.size = g.n + g.m
        nb: list[list[int]] = []
        for v in range(g.n):
            nb.append(sorted(list(g.neighbors(v)) + [g.n + e for e in g.incident_edges(v)]))
        for e, (a, b) in enumerate(g.edges):
            s = {a, b}
            s.update(g.n + f for f in g.incident_edges(a) if f != e)
            s.update(g.n + f for f in g.incident_edges(b) if f != e)
            nb.append(sorted(s))
        self.nbrs = nb

    def index(self, x: Element) -> int:
        if isinstance(x, Vertex):
            if not 0 <= x.id < self.g.n:
                raise ForeignElement(f"{x!r} is not a vertex of the graph")
            return x.id
        if not 0 <= x.id < self.g.m:
            raise ForeignElement(f"{x!r} is not an edge of the graph")
        return self.g.n + x.id

    def element(self, i: int) -> Element:
        return Vertex(i) if i < self.g.n else Edge(i - self.g.n)


def is_valid_total(g: Graph, c: TotalColoring) -> bool:
    tg = TotalGraph(g)
    col = [0] * tg.size
    for x, k in c.items():
        col[tg.index(x)] = k
    for i in range(tg.size):
        if col[i]:
            for j in tg.nbrs[i]:
                if j > i and col[j] == col[i]:
                    return False
    return True


def used_at(g: Graph, c: TotalColoring, w: int) -> frozenset[int]:
    """Colors on vertex ``w`` and its incident edges."""
    out = set()
    if Vertex(w) in c:
        out.add(c[Vertex(w)])
    for e in g.incident_edges(w):
        if Edge(e) in c:
            out.add(c[Edge(e)])
    return frozenset(out)


def available(g: Graph, c: TotalColoring, x: Element) -> frozenset[int]:
    """Colors in ``[kappa]`` not used on any colored element conflicting with ``x``."""
    taken = {c[y] for y in conflicts(g, x) if y in c}
    return frozenset(k for k in range(1, c.kappa + 1) if k not in taken)


def mcdiarmid_upper(delta: int) -> int:
    """Upper bound floor(7*delta/5) + 3 on the total chromatic number."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return (7 * delta) // 5 + 3


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


class _Search:
    """Backtracking over a target set of a total graph.

    Variable choice: fewest remaining colors, then most conflicts, then lowest
    index. Colors are tried in ascending order unless ``rng`` shuffles them.
    """

    def __init__(self, tg: TotalGraph, kappa: int, fixed: list[int], targets: list[int],
                 allowed: dict[int, int] | None = None, rng: random.Random | None = None,
                 symmetry_from: int | None = None):
        self.tg = tg
        self.kappa = kappa
        self.col = list(fixed)
        self.full = (1 << kappa) - 1
        self.targets = targets
        self.tset = set(targets)
        self.rng = rng
        self.nodes = 0
        base = {}
        for t in targets:
            m = 0
            for j in tg.nbrs[t]:
                if self.col[j] and j not in self.tset:
                    m |= 1 << (self.col[j] - 1)
            ok = self.full & ~m
            if allowed is not None and t in allowed:
                ok &= allowed[t]
            base[t] = ok
        self.base = base
        self.tnbrs = {t: [j for j in tg.nbrs[t] if j in self.tset] for t in targets}
        self.weight = {t: len(tg.nbrs[t]) for t in targets}
        # colors above symmetry_from are interchangeable until first used
        self.sym = symmetry_from

    def _domain(self, t: int) -> int:
        m = self.base[t]
        for j in self.tnbrs[t]:
            if self.col[j]:
                m &= ~(1 << (self.col[j] - 1))
        return m

    def run(self) -> bool:
        for t in self.targets:
            self.col[t] = 0
        return self._rec(len(self.targets), self.sym if self.sym is not None else self.kappa)

    def _rec(self, left: int, maxc: int) -> bool:
        if left == 0:
            return True
        self.nodes += 1
        best = None
        best_key = None
        best_dom = 0
        for t in self.targets:
            if self.col[t]:
                continue
            d = self._domain(t)
            key = (d.bit_count(), -self.weight[t], t)
            if best_key is None or key < best_key:
                best, best_key, best_dom = t, key, d
                if key[0] == 0:
                    return False
        colors = list(_bits(best_dom))
        if self.sym is not None:
            colors = [k for k in colors if k <= maxc + 1]
        if self.rng is not None:
            self.rng.shuffle(colors)
        for k in colors:
            self.col[best] = k
            if self._rec(left - 1, max(maxc, k)):
                return True
        self.col[best] = 0
        return False


def _fixed_array(tg: TotalGraph, c: TotalColoring) -> list[int]:
    col = [0] * tg.size
    for x, k in c.items():
        col[tg.index(x)] = k
    return col


def _to_coloring(tg: TotalGraph, kappa: int, col: list[int]) -> TotalColoring:
    return TotalColoring(kappa, {tg.element(i): k for i, k in enumerate(col) if k})


def extend_exhaustive(g: Graph, kappa: int, partial: TotalColoring, targets: Iterable[Element],
                      lists: Mapping[Element, Iterable[int]] | None = None,
                      rng: random.Random | None = None) -> TotalColoring | None:
    """Color ``targets`` on top of ``partial``, or return ``None`` if impossible.

    ``lists`` optionally restricts the colors a target may take. Targets that
    are already colored in ``partial`` are recolored.
    """
    tg = TotalGraph(g)
    tidx = sorted({tg.index(x) for x in targets})
    if not tidx:
        return partial
    fixed = _fixed_array(tg, partial)
    allowed = None
    if lists is not None:
        allowed = {}
        for x, ls in lists.items():
            m = 0
            for k in ls:
                if 1 <= k <= kappa:
                    m |= 1 << (k - 1)
            allowed[tg.index(x)] = m
    s = _Search(tg, kappa, fixed, tidx, allowed, rng)
    if not s.run():
        return None
    return _to_coloring(tg, kappa, s.col)


def _star_clique(g: Graph) -> list[int]:
    """A maximum-degree vertex with its incident edges: Delta+1 pairwise conflicting elements."""
    if g.n == 0:
        return []
    v = max(range(g.n), key=lambda x: (g.degree(x), -x))
    return [v] + [g.n + e for e in g.incident_edges(v)]


def find_total_coloring(g: Graph, kappa: int, cap: int | None = DEFAULT_ELEMENT_CAP) -> TotalColoring | None:
    """Some proper total coloring with colors ``1..kappa``, or ``None``."""
    tg = TotalGraph(g)
    if cap is not None and tg.size > cap:
        raise InstanceTooLarge(tg.size, cap)
    clique = _star_clique(g)
    if len(clique) > kappa:
        return None
    col = [0] * tg.size
    for k, i in enumerate(clique, start=1):
        col[i] = k
    targets = [i for i in range(tg.size) if not col[i]]
    s = _Search(tg, kappa, col, targets, symmetry_from=len(clique))
    if not s.run():
        return None
    return _to_coloring(tg, kappa, s.col)


def chi_total(g: Graph, cap: int | None = DEFAULT_ELEMENT_CAP) -> int:
    """Exact total chromatic number by deepening from Delta+1.

    Refuses (``InstanceTooLarge``) rather than guessing when ``|V|+|E|`` exceeds ``cap``.
    """
    if g.n < 1:
        raise ValueError("chi_total needs at least one vertex")
    if cap is not None and g.n + g.m > cap:
        raise InstanceTooLarge(g.n + g.m, cap)
    delta = g.max_degree()
    hi = mcdiarmid_upper(delta)
    for k in range(delta + 1, hi + 1):
        if find_total_coloring(g, k, cap=None) is not None:
            return k
    raise AssertionError(f"no total coloring with {hi} colors; the upper bound says otherwise")


def random_total_coloring(g: Graph, kappa: int, rng: random.Random,
                          partial: TotalColoring | None = None) -> TotalColoring | None:
    """A proper total coloring found with shuffled color orders (not uniform)."""
    base = partial or TotalColoring(kappa)
    rest = [x for x in all_elements(g) if x not in base]
    return extend_exhaustive(g, kappa, base, rest, rng=rng)


def iter_total_colorings(g: Graph, kappa: int, skip: Iterable[Element] = (), canonical: bool = True,
                         order: list[int] | None = None) -> Iterator[list[int]]:
    """Every proper coloring of the elements not in ``skip``, as dense color arrays.

    With ``canonical`` only one representative per color permutation is
    produced: along ``order`` each new color is the smallest unused one.
    Arrays are yielded in lexicographic order of ``order`` and reused between
    yields, so copy them if kept.
    """
    tg = TotalGraph(g)
    skipped = {tg.index(x) for x in skip}
    seq = order if order is not None else [i for i in range(tg.size) if i not in skipped]
    col = [0] * tg.size
    nb = [[j for j in tg.nbrs[i] if j not in skipped] for i in range(tg.size)]
    last = len(seq)

    def rec(pos: int, maxc: int):
        if pos == last:
            yield col
            return
        i = seq[pos]
        taken = {col[j] for j in nb[i]}
        top = min(kappa, maxc + 1) if canonical else kappa
        for k in range(1, top + 1):
            if k in taken:
                continue
            col[i] = k
            yield from rec(pos + 1, max(maxc, k))
        col[i] = 0

    yield from rec(0, 0)
