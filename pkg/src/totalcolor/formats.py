"""Line-oriented text formats for graphs, colorings and configurations.

Blank lines and lines starting with ``#`` are ignored by every parser.
Emitters produce canonical text, so emit(parse(emit(x))) == emit(x).
"""

from __future__ import annotations

from .audit import KINDS, SYMBOLS, Configuration, DegreeConstraint
from .coloring import Edge, TotalColoring, Vertex
from .embedding import Embedding
from .graph import Graph, GraphError, build_graph


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.strip()
        if s and not s.startswith("#"):
            yield no, s


def _ints(tokens, no):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", no) from None


# --------------------------------------------------------------------------- graphs

def emit_graph(g: Graph, emb: Embedding | None = None) -> str:
    out = [f"graph {g.n}"]
    out += [f"e {u} {v}" for u, v in g.edges]
    if emb is not None:
        for v in range(g.n):
            out.append(f"rot {v}:" + "".join(f" {u}" for u in emb.rotation[v]))
    return "\n".join(out) + "\n"


def parse_graph(text: str, need_embedding: bool = False) -> tuple[Graph, Embedding | None]:
    """Parse a graph file; the embedding is returned when ``rot`` lines are present."""
    n = None
    edges = []
    rot: dict[int, list[int]] = {}
    for no, s in _lines(text):
        tok = s.split()
        if tok[0] == "graph":
            if n is not None or len(tok) != 2:
                raise FormatError("expected a single 'graph <n>' header", no)
            (n,) = _ints(tok[1:], no)
        elif n is None:
            raise FormatError("missing 'graph <n>' header", no)
        elif tok[0] == "e":
            if len(tok) != 3:
                raise FormatError("expected 'e <u> <v>'", no)
            edges.append(tuple(_ints(tok[1:], no)))
        elif tok[0] == "rot":
            head, _, rest = s[3:].partition(":")
            (v,) = _ints([head.strip()], no)
            if v in rot:
                raise FormatError(f"duplicate rotation for {v}", no)
            rot[v] = _ints(rest.split(), no)
        else:
            raise FormatError(f"unknown directive {tok[0]!r}", no)
    if n is None:
        raise FormatError("empty graph file")
    try:
        g = build_graph(edges, n)
    except GraphError as exc:
        raise FormatError(str(exc)) from None
    if not rot:
        if need_embedding:
            raise FormatError("no 'rot' lines: an embedding is required")
        return g, None
    missing = [v for v in range(n) if v not in rot and g.degree(v) > 0]
    if missing:
        raise FormatError(f"missing rotation for vertices {missing}")
    return g, Embedding(g, rot)


# --------------------------------------------------------------------------- colorings

def emit_coloring(g: Graph, c: TotalColoring) -> str:
    out = [f"kappa {c.kappa}"]
    for v in range(g.n):
        if Vertex(v) in c:
            out.append(f"v {v} {c[Vertex(v)]}")
    for i, (u, v) in enumerate(g.edges):
        if Edge(i) in c:
            out.append(f"e {u} {v} {c[Edge(i)]}")
    return "\n".join(out) + "\n"


def parse_coloring(text: str, g: Graph) -> TotalColoring:
    kappa = None
    assign = {}
    for no, s in _lines(text):
        tok = s.split()
        if tok[0] == "kappa" and len(tok) == 2:
            (kappa,) = _ints(tok[1:], no)
            continue
        if tok[0] == "v" and len(tok) == 3:
            v, col = _ints(tok[1:], no)
            if not 0 <= v < g.n:
                raise FormatError(f"vertex {v} out of range", no)
            x = Vertex(v)
        elif tok[0] == "e" and len(tok) == 4:
            u, v, col = _ints(tok[1:], no)
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                raise FormatError(f"{u} {v} is not an edge of the graph", no)
            x = Edge(g.edge_id(u, v))
        else:
            raise FormatError(f"cannot parse {s!r}", no)
        if x in assign:
            raise FormatError(f"{x} colored twice", no)
        assign[x] = col
    if kappa is None:
        raise FormatError("missing 'kappa <k>' line")
    try:
        return TotalColoring(kappa, assign)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


# --------------------------------------------------------------------------- configurations

def emit_configuration(conf: Configuration) -> str:
    p = conf.pattern
    out = [f"conf {p.n}"]
    out += [f"e {u} {v}" for u, v in p.edges]
    for v in sorted(conf.constraints):
        c = conf.constraints[v]
        if c.kind != "any":
            out.append(f"deg {v} {c.kind} {c.expr}")
    out += [f"closed {v}" for v in sorted(conf.closed)]
    out += [f"delete {u} {v}" for u, v in conf.delete]
    out += [f"erase {v}" for v in conf.erase]
    return "\n".join(out) + "\n"


def _expr(s: str, no):
    if s in SYMBOLS:
        return s
    try:
        return int(s)
    except ValueError:
        raise FormatError(f"bad degree expression {s!r}", no) from None


def parse_configuration(text: str, name: str = "") -> Configuration:
    n = None
    edges, cons, closed, delete, erase = [], {}, [], [], []
    for no, s in _lines(text):
        tok = s.split()
        key, args = tok[0], tok[1:]
        if key == "conf" and len(args) == 1 and n is None:
            (n,) = _ints(args, no)
        elif n is None:
            raise FormatError("missing 'conf <n>' header", no)
        elif key == "e" and len(args) == 2:
            edges.append(tuple(_ints(args, no)))
        elif key == "deg" and len(args) == 3 and args[1] in KINDS and args[1] != "any":
            (v,) = _ints(args[:1], no)
            cons[v] = DegreeConstraint(args[1], _expr(args[2], no))
        elif key == "closed" and len(args) == 1:
            closed += _ints(args, no)
        elif key == "delete" and len(args) == 2:
            delete.append(tuple(_ints(args, no)))
        elif key == "erase" and len(args) == 1:
            erase += _ints(args, no)
        else:
            raise FormatError(f"cannot parse {s!r}", no)
    if n is None:
        raise FormatError("empty configuration file")
    try:
        return Configuration(build_graph(edges, n), cons, frozenset(closed), tuple(delete), tuple(erase), name)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
