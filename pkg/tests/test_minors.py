import random
from itertools import combinations

import pytest

from sapforce import families
from sapforce.graphs import CapExceededError, Graph
from sapforce.minors import clique_number, hadwiger, has_minor, vertex_cover_number


def validate_witness(g: Graph, h: Graph, witness) -> None:
    assert len(witness) == h.n
    for a, b in combinations(witness, 2):
        assert not a & b
    for bs in witness:
        assert bs and g.induced(bs).is_connected()
    for u, v in h.edges():
        a, b = witness[u - 1], witness[v - 1]
        assert any(g.has_edge(x, y) for x in a for y in b)


def test_minor_examples():
    ok, wit = has_minor(families.cycle(5), families.complete(3))
    assert ok
    validate_witness(families.cycle(5), families.complete(3), wit)
    assert not has_minor(families.path(6), families.star(3))[0]
    ok, wit = has_minor(families.petersen(), families.complete(5))
    assert ok
    validate_witness(families.petersen(), families.complete(5), wit)


def test_minor_reflexive_and_transitive():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(2, 6)
        edges = [(u, v) for u, v in combinations(range(1, n + 1), 2) if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        assert has_minor(g, g)[0]
        # one random minor step down, then another: still a minor of g
        h = g
        for _ in range(2):
            es = h.edges()
            if es and rng.random() < 0.7:
                h = h.contract_edge(*rng.choice(es)) if rng.random() < 0.5 else \
                    h.delete_vertex(rng.randint(1, h.n))
        if h.n >= 1:
            assert has_minor(g, h)[0]


def test_hadwiger_values(connected_upto_6):
    assert hadwiger(families.complete(5)) == 5
    assert hadwiger(families.complete(1)) == 1
    for n in (2, 5, 7):
        t = families.star(n - 1) if n > 2 else families.path(2)
        assert hadwiger(t) == 2
    assert hadwiger(families.kite5()) == 3
    rng = random.Random(11)
    for g in rng.sample(connected_upto_6, 25):
        eta = hadwiger(g)
        for v in g.vertices():
            if g.n > 1:
                assert hadwiger(g.delete_vertex(v)) <= eta
        for e in g.edges():
            adj = list(g.adj)
            adj[e[0]] &= ~(1 << e[1])
            adj[e[1]] &= ~(1 << e[0])
            assert hadwiger(Graph(g.n, tuple(adj))) <= eta


def test_caps():
    with pytest.raises(CapExceededError):
        hadwiger(families.dodecahedron())
    with pytest.raises(CapExceededError):
        vertex_cover_number(families.dodecahedron())
    # independence number of the dodecahedron is 8, so the cover needs 12
    assert vertex_cover_number(families.dodecahedron(), cap=20) == 12


def test_vertex_cover_values():
    for n in range(2, 7):
        assert vertex_cover_number(families.complete(n)) == n - 1
    assert vertex_cover_number(families.path(4)) == 2
    assert vertex_cover_number(families.empty(5)) == 0
    assert vertex_cover_number(families.petersen()) == 6
    assert vertex_cover_number(families.cycle(7)) == 4


def test_vertex_cover_bruteforce_agreement(connected_upto_5):
    def brute(g):
        for size in range(g.n + 1):
            for combo in combinations(g.vertices(), size):
                s = set(combo)
                if all(u in s or v in s for u, v in g.edges()):
                    return size
        return g.n
    for g in connected_upto_5:
        assert vertex_cover_number(g) == brute(g)


def test_clique_number():
    assert clique_number(families.petersen()) == 2
    assert clique_number(families.complete(6)) == 6
    assert clique_number(families.octahedron()) == 3
