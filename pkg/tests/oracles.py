"""Slow reference implementations used only by the tests.

Nothing here imports the solver or the matcher; the total graph is built
from networkx primitives and searched by plain fixed-order backtracking.
"""

from __future__ import annotations

import itertools

import networkx as nx


def nx_graph(edges, n):
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    return G


def total_graph(G: nx.Graph) -> nx.Graph:
    """Vertices ('v', x) and edges ('e', frozenset) with adjacency/incidence conflicts."""
    T = nx.Graph()
    for x in G.nodes:
        T.add_node(("v", x))
    L = nx.line_graph(G)
    for e in G.edges:
        T.add_node(("e", frozenset(e)))
    for a, b in L.edges:
        T.add_edge(("e", frozenset(a)), ("e", frozenset(b)))
    for a, b in G.edges:
        T.add_edge(("v", a), ("v", b))
        T.add_edge(("v", a), ("e", frozenset((a, b))))
        T.add_edge(("v", b), ("e", frozenset((a, b))))
    return T


def count_colorings(T: nx.Graph, k: int, stop_at: int | None = None) -> int:
    """Number of proper k-colorings of T, by unpruned backtracking in a fixed order."""
    order = sorted(T.nodes, key=repr)
    col = {}
    found = 0

    def rec(i):
        nonlocal found
        if stop_at is not None and found >= stop_at:
            return
        if i == len(order):
            found += 1
            return
        x = order[i]
        for c in range(1, k + 1):
            if all(col.get(y) != c for y in T[x]):
                col[x] = c
                rec(i + 1)
                del col[x]

    rec(0)
    return found


def naive_chi_total(edges, n) -> int:
    T = total_graph(nx_graph(edges, n))
    k = 1
    while count_colorings(T, k, stop_at=1) == 0:
        k += 1
    return k


def naive_is_proper(edges, n, vcol: dict, ecol: dict) -> bool:
    """vcol: vertex -> color, ecol: frozenset pair -> color; every element must be colored."""
    T = total_graph(nx_graph(edges, n))
    col = {("v", x): c for x, c in vcol.items()}
    col.update({("e", e): c for e, c in ecol.items()})
    if set(col) != set(T.nodes):
        return False
    return all(col[a] != col[b] for a, b in T.edges)


def naive_occurrences(host_edges, host_n, pat_edges, pat_n, ok) -> set[tuple[int, ...]]:
    """All injective edge-preserving maps, by trying every tuple of distinct vertices."""
    H = nx_graph(host_edges, host_n)
    out = set()
    for img in itertools.permutations(range(host_n), pat_n):
        if all(ok(i, img[i]) for i in range(pat_n)) and all(H.has_edge(img[a], img[b]) for a, b in pat_edges):
            out.add(img)
    return out


def nx_genus_faces(rotation: dict) -> int:
    """Face count of a rotation system via networkx's half-edge structure."""
    E = nx.PlanarEmbedding()
    for v, nbrs in rotation.items():
        E.add_node(v)
    for v, nbrs in rotation.items():
        prev = None
        for u in nbrs:
            # counter-clockwise order in networkx terms: add each neighbour after the previous one
            E.add_half_edge(v, u, ccw=prev) if prev is not None else E.add_half_edge(v, u)
            prev = u
    seen = set()
    faces = 0
    for v, u in E.edges:
        if (v, u) not in seen:
            E.traverse_face(v, u, mark_half_edges=seen)
            faces += 1
    return faces
