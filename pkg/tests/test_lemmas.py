import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from totalcolor import fixtures as F
from totalcolor import lemmas
from totalcolor.coloring import Edge, TotalColoring, TotalGraph, Vertex, is_valid_total, iter_total_colorings
from totalcolor.lemmas import (LemmaPreconditionError, ListTooSmall, OddCycle, ProofContradictionWitness, Recoloring,
                               two_edge_choose_even_cycle, triangle_total_3_choose)

from .samplers import CASES, coloring_minus

# elements each argument is allowed to touch, written as vertex pairs (edges) and single vertices
TOUCHED = {
    "H_SD3": [(0, 1), (1, 2), (0, 2), 1],
    "H_2T": [(0, 1), (0, 2), (1, 2), 1],
    "H_OS": [(0, 1), (0, 2), (0, 3), (1, 2), 1, 3],
    "H_TT": [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), 2, 4],
    "H_2V2T": [(0, 1), (0, 2), (0, 3), (1, 2), 1, 3],
    "H_NET": [(0, 4), (0, 1), (0, 2), (0, 3), (1, 2), (2, 3), 4, 2],
    "H_444": [(0, 1), (1, 2), (0, 2), 0, 1, 2],
}


def touched_elements(g, name):
    out = set()
    for t in TOUCHED[name]:
        out.add(Edge(g.edge_id(*t)) if isinstance(t, tuple) else Vertex(t))
    return out


def run_case(name, seed):
    proc, roles, dele, erased = CASES[name]
    g, kappa, _ = F.lemma_host(name)
    c = coloring_minus(g, kappa, dele, random.Random(seed), erased, stuck=seed % 2 == 1)
    return g, c, getattr(lemmas, proc)(g, kappa, *roles, c)


@pytest.mark.parametrize("name", sorted(CASES))
def test_procedure_output_is_proper_and_local(name):
    allowed = None
    for seed in range(30):
        g, before, res = run_case(name, seed)
        allowed = allowed or touched_elements(g, name)
        assert isinstance(res, Recoloring)
        assert is_valid_total(g, res.coloring)
        assert len(res.coloring) == g.n + g.m
        for x, k in before.items():
            if x not in allowed:
                assert res.coloring[x] == k


def test_2tau_exchange_branch_reachable():
    g, kappa, _ = F.lemma_host("H_2T")
    tg = TotalGraph(g)
    uv = Edge(g.edge_id(0, 1))
    for arr in iter_total_colorings(g, kappa, skip=[uv]):
        c = TotalColoring(kappa, {tg.element(i): k for i, k in enumerate(arr) if k})
        res = lemmas.recolor_2tau(g, kappa, 0, 1, 2, c)
        if res.branch == "exchange":
            wu, wv = Edge(g.edge_id(0, 2)), Edge(g.edge_id(1, 2))
            assert res.coloring[wu] == c[wv] and res.coloring[wv] == c[wu]
            assert is_valid_total(g, res.coloring)
            return
    pytest.fail("no coloring reached the exchange step")


def test_two_triangles_witness_only_with_degree_gap():
    g, kappa, _ = F.lemma_host("H_TTW")
    assert g.degree(4) >= g.degree(2) + 2
    seen = 0
    for seed in range(3000):
        c = coloring_minus(g, kappa, [(0, 2)], random.Random(seed), [2, 4], stuck=True)
        res = lemmas.recolor_twotriangles(g, kappa, 0, 1, 2, 3, 4, c)
        if isinstance(res, ProofContradictionWitness):
            assert res.used_w2 < res.used_w4
            assert {res.color_ww1, res.color_ww3} <= res.used_w4
            seen += 1
            if seen == 3:
                break
        else:
            assert is_valid_total(g, res.coloring)
    assert seen


def test_preconditions_checked():
    g, kappa, _ = F.lemma_host("H_SD3")
    c = coloring_minus(g, kappa, [(0, 1)], random.Random(0))
    with pytest.raises(LemmaPreconditionError):
        lemmas.recolor_sumdelta3(g, kappa, 1, 0, 2, c)
    with pytest.raises(LemmaPreconditionError):
        lemmas.recolor_sumdelta3(g, kappa + 1, 0, 1, 2, c)


def _brute_even_cycle(lists):
    k = len(lists)
    for combo in itertools.product(*lists):
        if all(combo[i] != combo[(i + 1) % k] for i in range(k)):
            return True
    return False


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=2, max_value=4).map(lambda h: 2 * h).flatmap(
    lambda n: st.lists(st.sets(st.integers(1, 4), min_size=2, max_size=3), min_size=n, max_size=n)))
def test_even_cycle_choice(lists):
    out = two_edge_choose_even_cycle(len(lists), lists)
    assert _brute_even_cycle([sorted(s) for s in lists])
    assert all(out[i] in lists[i] for i in range(len(lists)))
    assert all(out[i] != out[(i + 1) % len(out)] for i in range(len(out)))


def test_even_cycle_rejects_bad_input():
    with pytest.raises(OddCycle):
        two_edge_choose_even_cycle(5, [[1, 2]] * 5)
    with pytest.raises(ListTooSmall):
        two_edge_choose_even_cycle(4, [[1, 2], [1], [1, 2], [1, 2]])


@settings(max_examples=80, deadline=None)
@given(st.lists(st.sets(st.integers(1, 5), min_size=3, max_size=3), min_size=6, max_size=6))
def test_triangle_choice(lists):
    u, v, w, uv, vw, wu = triangle_total_3_choose(lists)
    assert all(x in s for x, s in zip((u, v, w, uv, vw, wu), lists))
    # vertex/vertex, edge/edge, and incidences; u is free only against vw, and so on
    for a, b in [(u, v), (v, w), (u, w), (uv, vw), (vw, wu), (uv, wu),
                 (u, uv), (u, wu), (v, uv), (v, vw), (w, vw), (w, wu)]:
        assert a != b


def test_triangle_choice_rejects_short_lists():
    with pytest.raises(ListTooSmall):
        triangle_total_3_choose([[1, 2]] + [[1, 2, 3]] * 5)
