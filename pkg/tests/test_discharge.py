import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totalcolor import fixtures as F
from totalcolor.audit import DefinitionViolated
from totalcolor.discharge import (FaceClass, NotPlaneOrTorus, apply_rules, check_euler_identity, classify_face,
                                  discharge, final_report, initial_charges, parse_fraction)
from totalcolor.embedding import Embedding, Face, euler_genus

EMBEDDINGS = F.named_embeddings()
SURFACE = {k: e for k, e in EMBEDDINGS.items() if euler_genus(e) <= 1}


def tri(degs):
    return classify_face(None, Face(0, ((0, 1), (1, 2), (2, 0))), degs)


def test_face_patterns():
    assert tri([3, 9, 10]) is FaceClass.R1
    assert tri([5, 7, 8]) is FaceClass.R2
    assert tri([6, 6, 6]) is FaceClass.R3
    assert tri([8, 8, 8]) is FaceClass.R3
    assert tri([4, 7, 8]) is FaceClass.OTHER_TRIANGLE
    assert tri([5, 6, 9]) is FaceClass.OTHER_TRIANGLE


def test_initial_charges():
    emb, v = F.bipyramid_with_two_vertex()
    led = initial_charges(emb)
    assert led.initial[f"v{v}"] == -2
    assert led.initial["v0"] == 4
    assert not led.transfers
    star = F.wheel_embedding(10)
    assert initial_charges(star).initial["v0"] == 6


@pytest.mark.parametrize("name", sorted(SURFACE))
def test_residue_and_conservation(name):
    emb = SURFACE[name]
    res = check_euler_identity(emb)
    assert res == (-8 if euler_genus(emb) == 0 else 0)
    led = apply_rules(emb, 11)
    assert led.total_final() == led.total_initial() == res


def test_genus_two_is_refused():
    with pytest.raises(NotPlaneOrTorus):
        check_euler_identity(EMBEDDINGS["K5_genus2"])


def test_rules_require_degree_below_kappa():
    with pytest.raises(DefinitionViolated):
        apply_rules(EMBEDDINGS["icosahedron"], 5)


def test_two_vertex_lines():
    emb, v = F.bipyramid_with_two_vertex()
    rep = discharge(emb, 11)
    assert rep.initial[f"v{v}"] + 2 * 1 == rep.final[f"v{v}"] == 0
    emb, v = F.bipyramid_with_two_vertex(9, five_face=True)
    rep = discharge(emb, 11)
    assert rep.initial[f"v{v}"] + 1 + 2 * Fraction(1, 2) == rep.final[f"v{v}"] == 0


def test_three_vertex_line():
    emb, v = F.bipyramid_with_three_vertex()
    rep = discharge(emb, 11)
    assert emb.graph.degree(v) == 3
    assert 3 - 4 + 3 * Fraction(1, 3) == rep.final[f"v{v}"] == 0


def test_six_vertex_line():
    rep = discharge(EMBEDDINGS["torus_triangular_4x4"], 11)
    for v in range(16):
        assert rep.final[f"v{v}"] == 6 - 4 - 6 * Fraction(1, 3) == 0


def test_four_vertex_untouched():
    rep = discharge(EMBEDDINGS["torus_grid_4x4"], 11)
    assert all(c == 0 for c in rep.final.values())
    assert rep.transfers == []


def test_dodecahedron_three_vertices_pay_each_other():
    # every neighbour of a 3-vertex is itself a 3-vertex, so the 1/3 shares cancel
    rep = discharge(EMBEDDINGS["dodecahedron"], 11)
    assert all(rep.final[f"v{v}"] == -1 for v in range(20))
    assert all(rep.final[f"f{f}"] == 1 for f in range(12))
    assert rep.min_final == -1 and not rep.ok


def test_transfers_are_local_and_sorted():
    for name, emb in SURFACE.items():
        led = apply_rules(emb, 11)
        keys = [(r, s[0], int(s[1:]), t[0], int(t[1:])) for r, s, t, _ in led.transfers]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)
        g = emb.graph
        for r, s, t, amt in led.transfers:
            assert amt > 0 and amt.denominator in {1, 2, 3, 5, 6, 10, 15, 30}
            if s[0] == "v" and t[0] == "v":
                assert g.has_edge(int(s[1:]), int(t[1:]))
            else:
                v, f = (s, t) if s[0] == "v" else (t, s)
                assert int(v[1:]) in emb.faces()[int(f[1:])].vertices()


def test_report_json_round_trip():
    rep = discharge(EMBEDDINGS["icosahedron"], 11)
    d = json.loads(rep.to_json())
    assert d["residue"] == "-8/1"
    assert sum(parse_fraction(e["final"]) for e in d["elements"]) == -8
    assert rep.to_json() == discharge(EMBEDDINGS["icosahedron"], 11).to_json()
    assert not d["outside_regime"]
    assert discharge(EMBEDDINGS["icosahedron"], 7).outside_regime


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_conservation_on_random_planar(seed):
    import networkx as nx

    rng = random.Random(seed)
    n = rng.randint(4, 12)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        G.add_edge(u, v)
        if not nx.check_planarity(G)[0]:
            G.remove_edge(u, v)
    from totalcolor.graph import build_graph

    g = build_graph(sorted(G.edges), n)
    emb = F.planar_embedding(g)
    rep = discharge(emb, max(11, g.max_degree() + 1))
    assert rep.residue == -8
    assert sum(rep.final.values()) == sum(rep.initial.values())
