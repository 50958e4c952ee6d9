"""End-to-end acceptance checks; each prints one PASS/FAIL line in the pytest summary.

Run directly (python tests/test_acceptance.py) to get the same lines on stdout.
"""

import random
import time
from contextlib import contextmanager

import networkx as nx
import pytest

from totalcolor import fixtures as F
from totalcolor import lemmas
from totalcolor.audit import audit, confirm_violation, recheck, verify_reducible
from totalcolor.coloring import chi_total, is_valid_total, mcdiarmid_upper
from totalcolor.discharge import apply_rules, check_euler_identity, discharge
from totalcolor.embedding import euler_genus
from totalcolor.graph import build_graph

try:
    from .conftest import ACCEPTANCE_LINES
    from .oracles import naive_chi_total
    from .samplers import CASES, coloring_minus
except ImportError:  # executed as a script
    from conftest import ACCEPTANCE_LINES
    from oracles import naive_chi_total
    from samplers import CASES, coloring_minus

# wall-clock budgets in seconds
LIMITS = {1: 300, 2: 600, 3: 300, 4: 1800, 5: 60, 6: 1800, 7: 300}


@contextmanager
def criterion(n, title):
    info = {}
    t0 = time.monotonic()
    status = "FAIL"
    try:
        yield info
        elapsed = time.monotonic() - t0
        assert elapsed < LIMITS[n], f"took {elapsed:.1f}s, limit {LIMITS[n]}s"
        status = "PASS"
    finally:
        elapsed = time.monotonic() - t0
        detail = info.get("detail", "")
        line = f"[{status}] criterion {n}: {title} ({elapsed:.1f}s) {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(line)


def small_corpus():
    out = {}
    for n in range(3, 8):
        out[f"C{n}"] = F.cycle(n)
    for n in range(2, 8):
        out[f"P{n}"] = F.path(n)
    for n in range(2, 5):
        out[f"K{n}"] = F.complete(n)
    for k in range(1, 7):
        out[f"K1_{k}"] = F.star(k)
    return {k: g for k, g in out.items() if g.n + g.m <= 14}


def test_criterion_1_solver_matches_exhaustive_oracle():
    with criterion(1, "chi_total equals unpruned exhaustive search on graphs with |V|+|E| <= 14") as info:
        corpus = small_corpus()
        bad = [name for name, g in corpus.items() if chi_total(g) != naive_chi_total(g.edges, g.n)]
        info["detail"] = f"{len(corpus)} graphs, mismatches {bad}"
        assert not bad


def test_criterion_2_known_values_and_bounds():
    with criterion(2, "cycles C3..C12 and K2..K5 against brute force, plus degree bounds") as info:
        graphs = {f"C{n}": F.cycle(n) for n in range(3, 13)}
        graphs.update({f"K{n}": F.complete(n) for n in range(2, 6)})
        values = {}
        for name, g in graphs.items():
            k = chi_total(g)
            values[name] = k
            assert k == naive_chi_total(g.edges, g.n), name
            delta = g.max_degree()
            assert delta + 1 <= k <= mcdiarmid_upper(delta), name
        info["detail"] = " ".join(f"{k}={v}" for k, v in values.items())


def test_criterion_3_lemma_procedures():
    procs = ["H_SD3", "H_2T", "H_OS", "H_2V2T", "H_NET", "H_444"]
    with criterion(3, "100 seeded colorings per recoloring procedure") as info:
        failures = 0
        for name in procs:
            proc, roles, dele, erased = CASES[name]
            g, kappa, _ = F.lemma_host(name)
            for seed in range(100):
                c = coloring_minus(g, kappa, dele, random.Random(seed), erased, stuck=seed % 2 == 1)
                try:
                    res = getattr(lemmas, proc)(g, kappa, *roles, c)
                    ok = is_valid_total(g, res.coloring) and len(res.coloring) == g.n + g.m
                except lemmas.ProofFailure:
                    ok = False
                failures += not ok
        info["detail"] = f"{len(procs)} procedures x 100 colorings, failures {failures}"
        assert failures == 0


@pytest.mark.parametrize("name", ["two_tau", "triangle_444"])
def test_criterion_4_reducible_verdicts(name):
    conf, kappa = F.lemma_configurations()[name]
    with criterion(4, f"verify_reducible({name}, kappa={kappa}) is REDUCIBLE") as info:
        v = verify_reducible(conf, kappa)
        info["detail"] = f"{v} after {v.colorings_checked} canonical colorings"
        assert v.reducible


def test_criterion_5_discharging_exactness():
    with criterion(5, "residues, conservation and the per-degree arithmetic lines") as info:
        emb = F.named_embeddings()
        for name, want in [("dodecahedron", -8), ("octahedron", -8), ("icosahedron", -8), ("torus_grid_4x4", 0)]:
            assert check_euler_identity(emb[name]) == want, name
            led = apply_rules(emb[name], 11)
            assert led.total_final() == led.total_initial() == want, name
        e, v = F.bipyramid_with_two_vertex()
        bad2 = discharge(e, 11).final[f"v{v}"]
        e, v = F.bipyramid_with_two_vertex(9, five_face=True)
        good2 = discharge(e, 11).final[f"v{v}"]
        e, v = F.bipyramid_with_three_vertex()
        three = discharge(e, 11).final[f"v{v}"]
        six = min(discharge(emb["torus_triangular_4x4"], 11).final[f"v{i}"] for i in range(16))
        info["detail"] = f"bad2={bad2} good2={good2} three={three} six={six}"
        assert bad2 == 0 and good2 == 0 and three == 0 and six >= 0


def random_planar(rng, n, max_deg):
    G = nx.Graph()
    G.add_nodes_from(range(n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if G.degree(u) >= max_deg or G.degree(v) >= max_deg:
            continue
        G.add_edge(u, v)
        if not nx.check_planarity(G)[0]:
            G.remove_edge(u, v)
    return build_graph(sorted(G.edges), n)


def test_criterion_6_planar_spot_check():
    with criterion(6, "50 seeded random planar embeddings (n <= 10, max degree <= 8) have chi'' <= 11") as info:
        worst = 0
        for seed in range(50):
            rng = random.Random(seed)
            g = random_planar(rng, rng.randint(4, 10), rng.randint(3, 8))
            assert euler_genus(F.planar_embedding(g)) == 0 or g.m == 0
            k = chi_total(g)
            assert k <= 11
            worst = max(worst, k)
        info["detail"] = f"largest chi'' seen {worst}"


def test_criterion_7_audit_soundness():
    with criterion(7, "audit flags K4/C5 and every reduction-backed witness is confirmed") as info:
        assert audit(F.complete(4), 7).overall == "NotMinimal"
        assert audit(F.cycle(5), 5).overall == "NotMinimal"
        confirmed = 0
        for name, g in F.named_graphs().items():
            if g.n + g.m > 14 or g.m == 0:
                continue
            kappas = {g.max_degree() + 1, g.max_degree() + 2}
            kappas |= {"K4": {7}, "C5": {5}}.get(name, set())
            for kappa in sorted(kappas):
                for v in audit(g, kappa).violations:
                    assert recheck(g, kappa, v), (name, kappa, v)
                    if v.method:
                        assert confirm_violation(g, kappa, v), (name, kappa, v)
                        confirmed += 1
        info["detail"] = f"{confirmed} witnesses confirmed"
        assert confirmed


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
