"""Simple undirected graphs with dense integer ids."""

from __future__ import annotations

from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


class DuplicateEdge(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edge ids follow insertion order. Each edge is stored as ``(min, max)``.
    """

    __slots__ = ("n", "edges", "_adj", "_inc", "_eid")

    def __init__(self, n: int, edges: Sequence[tuple[int, int]]):
        self.n = n
        norm = []
        eid = {}
        adj: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u < 0 or v < 0 or u >= n or v >= n:
                raise VertexOutOfRange(f"edge ({u}, {v}) has an id outside 0..{n - 1}", (u, v))
            if u == v:
                raise LoopEdge(f"loop at vertex {u}", (u, v))
            key = (u, v) if u < v else (v, u)
            if key in eid:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})", (u, v))
            eid[key] = len(norm)
            norm.append(key)
            adj[u].append(v)
            adj[v].append(u)
            inc[u].append(eid[key])
            inc[v].append(eid[key])
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self._adj = tuple(tuple(a) for a in adj)
        self._inc = tuple(tuple(a) for a in inc)
        self._eid = eid

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def incident_edges(self, v: int) -> tuple[int, ...]:
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._eid

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._eid[(u, v) if u < v else (v, u)]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def min_degree(self) -> int:
        return min((len(a) for a in self._adj), default=0)

    def common_neighbors(self, u: int, v: int) -> list[int]:
        nv = set(self._adj[v])
        return sorted(x for x in self._adj[u] if x in nv)

    def without_edges(self, drop: Iterable[tuple[int, int]]) -> Graph:
        """Return the spanning subgraph with the given edges removed (ids renumbered)."""
        gone = {self.edge_id(u, v) for u, v in drop}
        return Graph(self.n, [e for i, e in enumerate(self.edges) if i not in gone])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Vertex ``v`` becomes ``perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(edge_list: Iterable[tuple[int, int]], n: int | None = None) -> Graph:
    """Build a graph from an edge list.

    ``n`` defaults to one more than the largest id mentioned, so isolated
    trailing vertices need an explicit ``n``.
    """
    edges = [(int(u), int(v)) for u, v in edge_list]
    if n is None:
        n = 1 + max((max(u, v) for u, v in edges), default=-1)
    return Graph(n, edges)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == g.n


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points, via iterative Hopcroft-Tarjan low-links."""
    disc = [-1] * g.n
    low = [0] * g.n
    cuts = set()
    t = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        children = 0
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    if v == root:
                        children += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if w != parent:
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts.add(parent)
        if children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def triangles_through(g: Graph, u: int, v: int) -> list[int]:
    """Third vertices of the triangles containing edge ``uv``."""
    return g.common_neighbors(u, v)


def find_cycle(g: Graph, edge_ids: Iterable[int]) -> list[int] | None:
    """Return the vertex sequence of some cycle in the subgraph spanned by ``edge_ids``."""
    adj: dict[int, list[int]] = {}
    for e in sorted(edge_ids):
        a, b = g.edges[e]
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    parent: dict[int, int] = {}
    for root in sorted(adj):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y == parent[x]:
                    continue
                if y in parent:
                    # walk both ends up to their common ancestor
                    path_x = [x]
                    while path_x[-1] != -1:
                        path_x.append(parent[path_x[-1]])
                    path_y = [y]
                    while path_y[-1] != -1:
                        path_y.append(parent[path_y[-1]])
                    anc = set(path_x)
                    k = next(i for i, z in enumerate(path_y) if z in anc)
                    top = path_y[k]
                    up = path_x[: path_x.index(top) + 1]
                    down = path_y[:k]
                    return up + down[::-1]
                parent[y] = x
                stack.append(y)
    return None
