from hypothesis import strategies as st

from totalcolor.graph import build_graph


@st.composite
def small_graphs(draw, max_n=7, max_m=None):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return build_graph(chosen, n)


@st.composite
def planar_graphs(draw, max_n=9):
    """Random triangulation-free-ish planar graphs: subgraphs of a random maximal planar graph."""
    import random

    import networkx as nx

    seed = draw(st.integers(min_value=0, max_value=10**6))
    n = draw(st.integers(min_value=3, max_value=max_n))
    rng = random.Random(seed)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        G.add_edge(u, v)
        if not nx.check_planarity(G)[0]:
            G.remove_edge(u, v)
    keep = [e for e in G.edges if rng.random() < 0.8]
    return build_graph(sorted(keep), n)
