"""Named graphs, embeddings and lemma configurations shipped with the toolkit."""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx

from .audit import ANY, AtMost, Configuration, Exact, host_complete
from .embedding import Embedding, euler_genus, rotation_from_positions
from .graph import Graph, build_graph


def _from_nx(G: nx.Graph) -> Graph:
    nodes = sorted(G.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    return build_graph(sorted(tuple(sorted((idx[a], idx[b]))) for a, b in G.edges()), len(nodes))


def planar_embedding(g: Graph) -> Embedding:
    """Rotation system of a planar graph, via networkx's planarity test."""
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    planar, emb = nx.check_planarity(G)
    if not planar:
        raise ValueError("graph is not planar")
    rot = [list(emb.neighbors_cw_order(v)) if g.degree(v) else [] for v in range(g.n)]
    return Embedding(g, rot)


def cycle(n: int) -> Graph:
    return build_graph([(i, (i + 1) % n) for i in range(n)], n)


def path(n: int) -> Graph:
    return build_graph([(i, i + 1) for i in range(n - 1)], n)


def complete(n: int) -> Graph:
    return build_graph(list(itertools.combinations(range(n), 2)), n)


def star(k: int) -> Graph:
    return build_graph([(0, i) for i in range(1, k + 1)], k + 1)


def wheel(k: int) -> Graph:
    """Hub 0 with rim 1..k."""
    return build_graph([(0, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(1, k + 1)], k + 1)


def cube() -> Graph:
    return _from_nx(nx.hypercube_graph(3))


def octahedron() -> Graph:
    return _from_nx(nx.octahedral_graph())


def icosahedron() -> Graph:
    return _from_nx(nx.icosahedral_graph())


def dodecahedron() -> Graph:
    return _from_nx(nx.dodecahedral_graph())


def cycle_embedding(n: int) -> Embedding:
    g = cycle(n)
    return Embedding(g, [[(i - 1) % n, (i + 1) % n] for i in range(n)])


def wheel_embedding(k: int) -> Embedding:
    import math

    pos = [(0.0, 0.0)] + [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    return rotation_from_positions(wheel(k), pos)


def toroidal_grid(rows: int = 4, cols: int = 4) -> Embedding:
    """Square grid with wrap-around; every face is a 4-cycle."""
    vid = lambda i, j: (i % rows) * cols + (j % cols)
    edges = []
    for i in range(rows):
        for j in range(cols):
            edges.append((vid(i, j), vid(i, j + 1)))
            edges.append((vid(i, j), vid(i + 1, j)))
    g = build_graph(edges, rows * cols)
    rot = []
    for i in range(rows):
        for j in range(cols):
            rot.append([vid(i, j + 1), vid(i + 1, j), vid(i, j - 1), vid(i - 1, j)])
    return Embedding(g, rot)


def toroidal_triangular(rows: int = 4, cols: int = 4) -> Embedding:
    """6-regular triangulation of the torus: the square grid with one diagonal per cell."""
    vid = lambda i, j: (i % rows) * cols + (j % cols)
    edges = []
    for i in range(rows):
        for j in range(cols):
            edges += [(vid(i, j), vid(i, j + 1)), (vid(i, j), vid(i + 1, j)), (vid(i, j), vid(i + 1, j + 1))]
    g = build_graph(edges, rows * cols)
    rot = []
    for i in range(rows):
        for j in range(cols):
            rot.append([vid(i, j + 1), vid(i + 1, j + 1), vid(i + 1, j),
                        vid(i, j - 1), vid(i - 1, j - 1), vid(i - 1, j)])
    return Embedding(g, rot)


@lru_cache(maxsize=None)
def _k5_rotations_by_genus() -> dict:
    g = complete(5)
    orders = []
    for v in range(5):
        nb = sorted(g.neighbors(v))
        first, rest = nb[0], nb[1:]
        orders.append([[first] + list(p) for p in itertools.permutations(rest)])
    found = {}
    for rot in itertools.product(*orders):
        emb = Embedding(g, rot)
        gen = euler_genus(emb)
        found.setdefault(gen, [list(r) for r in rot])
    return found


def k5_embedding(genus: int) -> Embedding:
    """First rotation system of K5 (lexicographic search) with the given genus."""
    return Embedding(complete(5), _k5_rotations_by_genus()[genus])


def bipyramid_with_two_vertex(ring: int = 8, five_face: bool = False) -> tuple[Embedding, int]:
    """Double wheel on a ring whose vertex 2 lost both ring edges, becoming a 2-vertex.

    Apexes 0 and 1 have degree ``ring``. The 2-vertex sees two 4-faces, or
    with ``five_face`` one of them is widened to a 5-face by dropping an apex
    spoke (apex 0 then has degree ``ring - 1``).
    """
    import math

    r = list(range(2, 2 + ring))
    edges = [(0, x) for x in r] + [(1, x) for x in r]
    edges += [(r[i], r[(i + 1) % ring]) for i in range(1, ring - 1)]
    if five_face:
        edges.remove((0, r[-1]))
    g = build_graph(edges, ring + 2)
    return _double_wheel_embedding(g, r), r[0]


def bipyramid_with_three_vertex(ring: int = 8) -> tuple[Embedding, int]:
    """Double wheel with one ring edge removed; its ends become 3-vertices with 4+-neighbours."""
    r = list(range(2, 2 + ring))
    edges = [(0, x) for x in r] + [(1, x) for x in r]
    edges += [(r[i], r[(i + 1) % ring]) for i in range(0, ring - 1)]
    g = build_graph(edges, ring + 2)
    return _double_wheel_embedding(g, r), r[0]


def _double_wheel_embedding(g: Graph, ring: list[int]) -> Embedding:
    # apex 0 inside, apex 1 at infinity; rotations written out directly
    k = len(ring)
    rot = {}
    rot[0] = [x for x in ring if g.has_edge(0, x)]
    rot[1] = [x for x in reversed(ring) if g.has_edge(1, x)]
    for i, x in enumerate(ring):
        prev, nxt = ring[(i - 1) % k], ring[(i + 1) % k]
        # counter-clockwise around x: outward apex, next ring vertex, inner apex, previous ring vertex
        order = [1, nxt, 0, prev]
        rot[x] = [y for y in order if g.has_edge(x, y)]
    return Embedding(g, rot)


def alternating_fan_fixture() -> tuple[Embedding, int]:
    """A 6-vertex whose corners alternate 3-face, 4-face around it (three fans)."""
    import math

    # centre 0, spokes 1..6, cap vertices 7, 8, 9 closing the 4-faces
    edges = [(0, i) for i in range(1, 7)] + [(1, 2), (3, 4), (5, 6), (2, 7), (7, 3), (4, 8), (8, 5), (6, 9), (9, 1)]
    g = build_graph(edges, 10)
    pos = [(0.0, 0.0)]
    for i in range(6):
        a = 2 * math.pi * i / 6
        pos.append((math.cos(a), math.sin(a)))
    for i in (1, 3, 5):
        a = 2 * math.pi * (i + 0.5) / 6
        pos.append((2 * math.cos(a), 2 * math.sin(a)))
    return rotation_from_positions(g, pos), 0


def wheel_with_subdivided_rim(k: int = 6) -> tuple[Embedding, int]:
    """Wheel whose rim edge 1-2 is subdivided: the hub sees one 4-face and one fan."""
    import math

    edges = [(0, i) for i in range(1, k + 1)] + [(i, i % k + 1) for i in range(2, k + 1)] + [(1, k + 1), (k + 1, 2)]
    g = build_graph(edges, k + 2)
    pos = [(0.0, 0.0)] + [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k)) for i in range(k)]
    a = 2 * math.pi * 0.5 / k
    pos.append((1.5 * math.cos(a), 1.5 * math.sin(a)))
    return rotation_from_positions(g, pos), 0


def named_graphs() -> dict[str, Graph]:
    out = {}
    for n in range(3, 13):
        out[f"C{n}"] = cycle(n)
    for n in range(2, 7):
        out[f"P{n}"] = path(n)
    for n in range(2, 6):
        out[f"K{n}"] = complete(n)
    for k in range(1, 7):
        out[f"K1_{k}"] = star(k)
    out["W6"] = wheel(6)
    out["cube"] = cube()
    out["octahedron"] = octahedron()
    out["icosahedron"] = icosahedron()
    out["dodecahedron"] = dodecahedron()
    return out


def named_embeddings() -> dict[str, Embedding]:
    out = {
        "K3": cycle_embedding(3),
        "C5": cycle_embedding(5),
        "W6": wheel_embedding(6),
        "cube": planar_embedding(cube()),
        "octahedron": planar_embedding(octahedron()),
        "icosahedron": planar_embedding(icosahedron()),
        "dodecahedron": planar_embedding(dodecahedron()),
        "torus_grid_4x4": toroidal_grid(4, 4),
        "torus_triangular_4x4": toroidal_triangular(4, 4),
        "K5_torus": k5_embedding(1),
        "K5_genus2": k5_embedding(2),
    }
    out["bad_2_vertex"] = bipyramid_with_two_vertex()[0]
    out["good_2_vertex"] = bipyramid_with_two_vertex(9, five_face=True)[0]
    out["three_vertex"] = bipyramid_with_three_vertex()[0]
    out["alternating_fans"] = alternating_fan_fixture()[0]
    out["subdivided_wheel"] = wheel_with_subdivided_rim()[0]
    return out


# --------------------------------------------------------------------------- lemma configurations

def _conf(name, edges, cons, closed=(), delete=(), erase=()):
    return Configuration(build_graph(edges), cons, frozenset(closed), tuple(delete), tuple(erase), name)


_TRIANGLE = [(0, 1), (0, 2), (1, 2)]


def lemma_configurations() -> dict[str, tuple[Configuration, int]]:
    """Configuration encodings and the kappa their fixture host is built for.

    Vertex roles: sumdelta3/two_tau (u, v, w); one_small (w, w1, w2, w3);
    two_triangles (w, w1, w2, w3, w4); two_vertex_two_triangles (w, w1, w2, w3);
    net (v, v1, v2, v3, u, w); triangle_444 (u, v, w).
    """
    tt_edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3)]
    return {
        "sumdelta3": (_conf("sumdelta3", _TRIANGLE, {0: Exact(5), 1: Exact(3), 2: AtMost(5)},
                            delete=[(0, 1)], erase=[1]), 7),
        "two_tau": (_conf("two_tau", _TRIANGLE, {0: Exact(4), 1: Exact(4), 2: ANY},
                          delete=[(0, 1)], erase=[1]), 8),
        "one_small": (_conf("one_small", [(0, 1), (0, 2), (0, 3), (1, 2)],
                            {0: Exact(5), 1: Exact(3), 3: AtMost(3)}, delete=[(0, 1)], erase=[1, 3]), 7),
        "two_triangles": (_conf("two_triangles", tt_edges, {0: Exact(6), 2: Exact(4), 4: AtMost("halfk")},
                                delete=[(0, 2)], erase=[2, 4]), 9),
        "two_triangles_witness": (_conf("two_triangles_witness", tt_edges, {0: Exact(9), 2: Exact(3), 4: Exact(5)},
                                        delete=[(0, 2)], erase=[2, 4]), 11),
        "two_vertex_two_triangles": (_conf("two_vertex_two_triangles", [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)],
                                           {0: Exact("kappa-1"), 3: AtMost(3)}, closed=[1],
                                           delete=[(0, 1)], erase=[1, 3]), 7),
        "net": (_conf("net", [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (0, 4), (4, 5)],
                      {0: Exact("kappa-1")}, closed=[2, 4], delete=[(0, 4)], erase=[4, 2]), 7),
        "triangle_444": (_conf("triangle_444", _TRIANGLE, {0: Exact(4), 1: Exact(4), 2: Exact(4)},
                               delete=_TRIANGLE, erase=[0, 1, 2]), 7),
        "edge_22": (_conf("edge_22", [(0, 1)], {0: Exact(2), 1: Exact(2)}, delete=[(0, 1)], erase=[0, 1]), 3),
    }


HOST_NAMES = {
    "H_SD3": "sumdelta3",
    "H_2T": "two_tau",
    "H_OS": "one_small",
    "H_TT": "two_triangles",
    "H_TTW": "two_triangles_witness",
    "H_2V2T": "two_vertex_two_triangles",
    "H_NET": "net",
    "H_444": "triangle_444",
}


def lemma_host(name: str) -> tuple[Graph, int, Configuration]:
    """Fixture host by ``H_*`` name: the completed configuration, its kappa and the configuration."""
    conf, kappa = lemma_configurations()[HOST_NAMES[name]]
    return host_complete(conf, kappa), kappa, conf
