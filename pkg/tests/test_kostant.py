from collections import Counter
from itertools import combinations_with_replacement

import networkx as nx
import pytest

from heckeo.kostant import (
    KostantError,
    KostantPartition,
    KPPoset,
    RootElement,
    beta_of_lambda,
    covering_moves,
    dominance_leq,
    enumerate_kp,
    hasse_diagram,
    hasse_dot,
    kp_leq,
    kp_of_weight,
    verify_orbit_embedding,
)


def brute_kp(beta: RootElement):
    """Every multiset of positive roots inside the support interval whose
    sum is beta."""
    d = dict(beta)
    lo, hi = min(d), max(d) + 1
    roots = [(i, j) for i in range(lo, hi) for j in range(i + 1, hi + 1)]
    target = Counter(d)
    out = set()
    for r in range(1, beta.height + 1):
        for combo in combinations_with_replacement(roots, r):
            c = Counter()
            for i, j in combo:
                for t in range(i, j):
                    c[t] += 1
            if c == target:
                out.add(KostantPartition(combo))
    return out


def all_betas(max_height, lo=-1, hi=2):
    idx = list(range(lo, hi))
    for h in range(1, max_height + 1):
        for combo in combinations_with_replacement(idx, h):
            yield RootElement(Counter(combo))


def closure_graph(beta):
    """Reflexive-transitive closure of the generating moves, via networkx."""
    G = nx.DiGraph()
    for p in enumerate_kp(beta):
        G.add_node(p)
        for q in covering_moves(p):
            G.add_edge(p, q)
    return nx.transitive_closure(G, reflexive=True)


# -- documented examples ------------------------------------------------------

def test_enumerate_examples():
    assert enumerate_kp(RootElement({0: 1})) == [KostantPartition([(0, 1)])]
    two = enumerate_kp(RootElement({0: 1, 1: 1}))
    assert set(two) == {KostantPartition([(0, 2)]), KostantPartition([(0, 1), (1, 2)])}
    assert enumerate_kp(RootElement({0: 2})) == [KostantPartition([(0, 1), (0, 1)])]


def test_leq_examples():
    whole, split = KostantPartition([(0, 2)]), KostantPartition([(0, 1), (1, 2)])
    assert kp_leq(whole, split)
    assert not kp_leq(split, whole)
    assert kp_leq(split, split)


def test_leq_rejects_mismatched_beta():
    with pytest.raises(KostantError):
        kp_leq([(0, 1)], [(0, 2)])


def test_hasse_examples():
    nodes, edges = hasse_diagram(RootElement({0: 1, 1: 1}))
    assert edges == [(KostantPartition([(0, 2)]), KostantPartition([(0, 1), (1, 2)]))]
    assert hasse_diagram(RootElement({0: 1}))[1] == []


def test_beta_of_lambda_examples():
    b = beta_of_lambda((2, 1))
    assert b == RootElement({-1: 1, 0: 2, 1: 1}) and b.height == 4
    b = beta_of_lambda((1, 1))
    assert b == RootElement({-1: 1, 0: 2}) and b.height == 3
    with pytest.raises(KostantError):
        beta_of_lambda((1, 0))
    with pytest.raises(KostantError):
        beta_of_lambda((1, 2))


def test_kp_of_weight_examples():
    assert kp_of_weight((2, 1)) == KostantPartition([(0, 2), (-1, 1)])
    assert kp_of_weight((1, 2)) == KostantPartition([(0, 1), (-1, 2)])
    with pytest.raises(KostantError):
        kp_of_weight((1,))
    with pytest.raises(KostantError):
        kp_of_weight((0, 1))


def test_dominance_examples():
    assert dominance_leq((1, 2), (2, 1))
    assert not dominance_leq((2, 1), (1, 2))
    assert dominance_leq((3, 1, 2), (3, 1, 2))
    assert not dominance_leq((1, 1), (2, 1))
    with pytest.raises(KostantError):
        dominance_leq((1,), (1, 2))


@pytest.mark.parametrize(
    "lam,size", [((2, 1), 2), ((1, 1), 1), ((2, 1, 1), 3), ((3, 2, 1), 6)]
)
def test_orbit_embedding_examples(lam, size):
    rep = verify_orbit_embedding(lam)
    assert rep.ok, rep.to_json()
    assert len(rep.orbit) == size


# -- oracles ------------------------------------------------------------------

@pytest.mark.parametrize("beta", list(all_betas(5)), ids=repr)
def test_enumeration_matches_brute_force(beta):
    got = enumerate_kp(beta)
    assert len(got) == len(set(got))
    assert set(got) == brute_kp(beta)
    for p in got:
        assert p.beta == beta


@pytest.mark.parametrize("beta", list(all_betas(6, -1, 2)), ids=repr)
def test_order_matches_networkx_closure(beta):
    P = KPPoset.build(beta)
    C = closure_graph(beta)
    for p in P.elements:
        for q in P.elements:
            assert P.leq(p, q) == C.has_edge(p, q)


@pytest.mark.parametrize("beta", list(all_betas(6, -1, 2)), ids=repr)
def test_poset_axioms_and_part_monotonicity(beta):
    P = KPPoset.build(beta)
    E = P.elements
    for p in E:
        assert P.leq(p, p)
        for q in E:
            if p != q and P.leq(p, q):
                assert not P.leq(q, p)
                assert len(p) <= len(q)
    for p, q in P.covers():
        assert len(q) - len(p) in (0, 1)
    # transitivity is checked through the closure being idempotent
    for p in E:
        up = {q for q in E if P.leq(p, q)}
        for q in up:
            assert {r for r in E if P.leq(q, r)} <= up


def test_hasse_is_transitive_reduction():
    beta = RootElement({-1: 1, 0: 2, 1: 1})
    nodes, edges = hasse_diagram(beta)
    C = closure_graph(beta)
    C.remove_edges_from(nx.selfloop_edges(C))
    R = nx.transitive_reduction(C)
    assert nx.is_directed_acyclic_graph(R)
    assert set(R.edges()) == set(edges)


def test_hasse_dot_lists_every_edge():
    beta = RootElement({-1: 1, 0: 2, 1: 1})
    nodes, edges = hasse_diagram(beta)
    dot = hasse_dot(beta)
    assert dot.startswith("digraph") and dot.count("->") == len(edges)


def dominant_weights(m, total):
    def rec(prefix, left, cap):
        if len(prefix) == m:
            if left == 0:
                yield tuple(prefix)
            return
        for v in range(min(cap, left), 0, -1):
            yield from rec(prefix + [v], left - v, v)
    yield from rec([], total, total)


SMALL_LAMBDAS = [lam for m in (2, 3) for s in range(m, 6) for lam in dominant_weights(m, s)]


@pytest.mark.parametrize("lam", SMALL_LAMBDAS, ids=str)
def test_orbit_embedding_small(lam):
    rep = verify_orbit_embedding(lam)
    assert rep.ok, rep.to_json()


def test_parse_roundtrip():
    assert RootElement.parse("-1:1,0:2,1:1") == RootElement({-1: 1, 0: 2, 1: 1})
    assert KostantPartition.parse("0,2;-1,1") == KostantPartition([(-1, 1), (0, 2)])
    with pytest.raises(KostantError):
        RootElement.parse("0-1")
    with pytest.raises(KostantError):
        KostantPartition([(2, 1)])
