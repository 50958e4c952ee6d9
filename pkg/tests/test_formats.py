import random

import pytest
from hypothesis import given, settings

from totalcolor import fixtures as F
from totalcolor.coloring import find_total_coloring
from totalcolor.formats import (FormatError, emit_coloring, emit_configuration, emit_graph, parse_coloring,
                                parse_configuration, parse_graph)

from .strategies import small_graphs


@given(small_graphs())
def test_graph_round_trip(g):
    text = emit_graph(g)
    h, emb = parse_graph(text)
    assert h == g and emb is None
    assert emit_graph(h) == text


@pytest.mark.parametrize("name", sorted(F.named_embeddings()))
def test_embedding_round_trip(name):
    emb = F.named_embeddings()[name]
    text = emit_graph(emb.graph, emb)
    g, e2 = parse_graph(text, need_embedding=True)
    assert e2.rotation == emb.rotation
    assert emit_graph(g, e2) == text


def test_missing_rotations():
    text = emit_graph(F.cycle(4))
    with pytest.raises(FormatError):
        parse_graph(text, need_embedding=True)
    with pytest.raises(FormatError):
        parse_graph(text + "rot 0: 1 3\n")


def test_graph_parse_errors_carry_line():
    with pytest.raises(FormatError) as exc:
        parse_graph("graph 3\ne 0 1\ne 1 x\n")
    assert exc.value.line == 3
    with pytest.raises(FormatError):
        parse_graph("graph 3\ne 0 1\ne 1 0\n")
    with pytest.raises(FormatError):
        parse_graph("e 0 1\n")


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_n=5, max_m=6))
def test_coloring_round_trip(g):
    c = find_total_coloring(g, g.max_degree() + 3)
    text = emit_coloring(g, c)
    back = parse_coloring(text, g)
    assert back == c
    assert emit_coloring(g, back) == text


def test_coloring_rejects_non_edges():
    g = F.path(3)
    with pytest.raises(FormatError):
        parse_coloring("kappa 3\ne 0 2 1\n", g)
    with pytest.raises(FormatError):
        parse_coloring("v 0 1\n", g)


@pytest.mark.parametrize("name", sorted(F.lemma_configurations()))
def test_configuration_round_trip(name):
    conf, _ = F.lemma_configurations()[name]
    text = emit_configuration(conf)
    back = parse_configuration(text, name)
    assert back.pattern == conf.pattern
    assert back.constraints == conf.constraints
    assert back.closed == conf.closed and back.delete == conf.delete and back.erase == conf.erase
    assert emit_configuration(back) == text


def test_configuration_symbols():
    conf = parse_configuration("conf 2\ne 0 1\ndeg 0 exact kappa-1\ndeg 1 atmost halfk\n")
    assert conf.constraint(0).bound(9, 8) == 8 and conf.constraint(1).bound(9, 8) == 4
    with pytest.raises(FormatError):
        parse_configuration("conf 2\ne 0 1\ndeg 0 exact kappa\n")
    with pytest.raises(FormatError):
        parse_configuration("conf 2\ne 0 1\ndelete 0 2\n")
