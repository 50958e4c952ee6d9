"""Rotation systems, face tracing, genus and the local structures around a vertex.

A dart ``(u, v)`` is the edge ``uv`` traversed from ``u`` to ``v``. The face
to the left of a dart is traced by repeatedly turning to the successor of the
incoming vertex in the rotation at the head:

    (u, v) -> (v, rot_v.next(u))
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graph import Graph, is_connected


class EmbeddingError(ValueError):
    pass


class NotConnected(EmbeddingError):
    pass


class NotDegreeTwo(ValueError):
    pass


@dataclass(frozen=True)
class Face:
    index: int
    darts: tuple[tuple[int, int], ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    def vertices(self) -> tuple[int, ...]:
        """Boundary vertices in walk order; repeats encode repeated incidence."""
        return tuple(d[0] for d in self.darts)


class Embedding:
    """A graph together with a cyclic order of neighbours at every vertex."""

    def __init__(self, graph: Graph, rotation: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]):
        self.graph = graph
        rot = []
        for v in range(graph.n):
            order = tuple(rotation.get(v, ()) if isinstance(rotation, Mapping) else rotation[v])
            if sorted(order) != sorted(graph.neighbors(v)):
                raise EmbeddingError(
                    f"rotation at {v} is {list(order)}, expected a cyclic order of {sorted(graph.neighbors(v))}"
                )
            rot.append(order)
        self.rotation: tuple[tuple[int, ...], ...] = tuple(rot)
        self._pos = [{w: i for i, w in enumerate(r)} for r in rot]
        self._faces: list[Face] | None = None
        self._dart_face: dict[tuple[int, int], int] | None = None

    def successor(self, v: int, u: int) -> int:
        r = self.rotation[v]
        return r[(self._pos[v][u] + 1) % len(r)]

    def reversed(self) -> Embedding:
        return Embedding(self.graph, [tuple(reversed(r)) for r in self.rotation])

    def faces(self) -> list[Face]:
        if self._faces is None:
            self._faces = trace_faces(self)
            self._dart_face = {d: f.index for f in self._faces for d in f.darts}
        return self._faces

    def face_of_dart(self, u: int, v: int) -> Face:
        self.faces()
        return self._faces[self._dart_face[(u, v)]]

    def corners(self, v: int) -> list[tuple[int, int, Face]]:
        """Angles at ``v`` in rotation order as ``(a, b, face)``.

        The corner between consecutive neighbours ``a`` then ``b`` lies in the
        face traced through darts ``(a, v), (v, b)``.
        """
        r = self.rotation[v]
        out = []
        for i, a in enumerate(r):
            b = r[(i + 1) % len(r)]
            out.append((a, b, self.face_of_dart(a, v)))
        return out


def trace_faces(emb: Embedding) -> list[Face]:
    """Trace every face of the embedding; each dart lies on exactly one face."""
    g = emb.graph
    darts = []
    for u, v in g.edges:
        darts.append((u, v))
        darts.append((v, u))
    darts.sort()
    used = set()
    faces = []
    for start in darts:
        if start in used:
            continue
        walk = []
        d = start
        while d not in used:
            used.add(d)
            walk.append(d)
            u, v = d
            d = (v, emb.successor(v, u))
        if d != start:
            raise EmbeddingError(f"face walk from {start} closed at {d}, rotation is inconsistent")
        faces.append(Face(len(faces), tuple(walk)))
    if sum(f.degree for f in faces) != 2 * g.m:
        raise EmbeddingError("face degrees do not sum to 2|E|")
    return faces


def euler_genus(emb: Embedding) -> int:
    """Orientable genus g with V - E + F = 2 - 2g."""
    g = emb.graph
    if g.n == 0 or not is_connected(g):
        raise NotConnected("genus is only defined here for connected graphs")
    f = len(emb.faces()) if g.m else 1
    chi = g.n - g.m + f
    if chi > 2 or chi % 2:
        raise EmbeddingError(f"Euler characteristic {chi} is not 2 - 2g")
    return (2 - chi) // 2


@dataclass(frozen=True)
class Fan:
    center: int
    spokes: tuple[int, ...]
    faces: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.faces)


class AllTriangulated:
    """Marker for a vertex whose incident faces are all 3-faces."""

    def __init__(self, center: int):
        self.center = center

    def __eq__(self, other):
        return isinstance(other, AllTriangulated) and other.center == self.center

    def __repr__(self):
        return f"AllTriangulated({self.center})"


def fans_at(emb: Embedding, v: int) -> tuple[list[Fan], int] | AllTriangulated:
    """Maximal runs of consecutive 3-face corners at ``v``.

    Returns ``(fans, epsilon)``; fans start at the first run after a 4+-face in
    rotation order.
    """
    corners = emb.corners(v)
    k = len(corners)
    if k == 0:
        return [], 0
    tri = [c[2].degree == 3 for c in corners]
    if all(tri):
        return AllTriangulated(v)
    start = next(i for i in range(k) if not tri[i])
    fans = []
    run: list[int] = []
    for step in range(1, k + 1):
        i = (start + step) % k
        if tri[i]:
            run.append(i)
            continue
        if run:
            spokes = (corners[run[0]][0],) + tuple(corners[j][1] for j in run)
            fans.append(Fan(v, spokes, tuple(corners[j][2].index for j in run)))
            run = []
    return fans, len(fans)


class TwoVertexKind(enum.Enum):
    GOOD = "good"
    BAD = "bad"


def classify_2_vertex(emb: Embedding, v: int) -> TwoVertexKind:
    if emb.graph.degree(v) != 2:
        raise NotDegreeTwo(f"vertex {v} has degree {emb.graph.degree(v)}")
    if any(f.degree >= 5 for _, _, f in emb.corners(v)):
        return TwoVertexKind.GOOD
    return TwoVertexKind.BAD


def rotation_from_positions(g: Graph, pos: Sequence[tuple[float, float]]) -> Embedding:
    """Counter-clockwise rotation from a straight-line drawing."""
    import math

    rot = []
    for v in range(g.n):
        x0, y0 = pos[v]
        rot.append(sorted(g.neighbors(v), key=lambda w: math.atan2(pos[w][1] - y0, pos[w][0] - x0)))
    return Embedding(g, rot)
