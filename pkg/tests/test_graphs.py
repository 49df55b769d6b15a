import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sapforce import families
from sapforce.canon import enumerate_connected
from sapforce.graphs import (Graph, Graph6Error, GraphError, encode_graph6,
                             format_edge_list, parse_edge_list, parse_graph6)


def test_single_vertex_decodes():
    g = parse_graph6("@")
    assert g.n == 1 and g.edges() == []


def test_hand_decoded_p4():
    # 'Ch' = n=4 (67-63), body 'h' = 104-63 = 41 = 101001 on the pair
    # stream (1,2),(1,3),(2,3),(1,4),(2,4),(3,4): edges 12, 23, 34
    g = parse_graph6("Ch")
    assert sorted(g.edges()) == [(1, 2), (2, 3), (3, 4)]


def test_roundtrip_on_connected_5_vertex_corpus():
    corpus = [
        "D?{", "D@s", "D@{", "DBg", "DBk", "DBw", "DB{", "DFw", "DF{", "DJk",
        "DJ{", "DK[", "DK{", "DLo", "DLs", "DL{", "DNw", "DN{", "D]{", "D^{",
        "D~{",
    ]
    assert len(corpus) == 21
    for s in corpus:
        assert encode_graph6(parse_graph6(s)) == s


def test_roundtrip_figure_graph():
    g = families.outer_triangle_on_wheel8()
    again = parse_graph6(encode_graph6(g))
    assert again.adj == g.adj


def test_parse_errors_name_offset():
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("")
    assert exc.value.offset == 0
    with pytest.raises(Graph6Error):
        parse_graph6("D")           # truncated bit vector
    with pytest.raises(Graph6Error) as exc:
        parse_graph6("D" + chr(30))  # out-of-range byte
    assert "offset" in str(exc.value)
    with pytest.raises(Graph6Error):
        parse_graph6("@@")          # trailing bytes


def test_header_prefix_accepted():
    g = parse_graph6(">>graph6<<Ch")
    assert g.n == 4


def test_long_form_vertex_count():
    g = families.path(70)
    s = encode_graph6(g)
    assert s.startswith("~")
    assert parse_graph6(s).adj == g.adj


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.randoms(use_true_random=False))
def test_roundtrip_random_graphs(n, rnd):
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rnd.random() < 0.4]
    g = Graph.from_edges(n, edges)
    assert parse_graph6(encode_graph6(g)).adj == g.adj


def test_complement_examples():
    assert families.complete(4).complement().num_edges() == 0
    assert sorted(families.path(4).complement().edges()) == [(1, 3), (1, 4), (2, 4)]
    comp = families.octahedron().complement()
    assert comp.num_edges() == 3
    assert all(comp.degree(v) == 1 for v in comp.vertices())


def test_complement_involution_and_edge_count(connected_upto_5):
    for g in connected_upto_5:
        assert g.complement().complement().adj == g.adj
        assert g.num_edges() + g.complement().num_edges() == g.n * (g.n - 1) // 2


def test_join_star_and_counts():
    star = families.complete(1).join(families.empty(3))
    assert sorted(star.edges()) == sorted(families.star(3).edges())
    rng = random.Random(5)
    for _ in range(20):
        n1, n2 = rng.randint(1, 4), rng.randint(1, 4)
        g = families.empty(n1) if rng.random() < 0.3 else families.path(n1)
        h = families.empty(n2) if rng.random() < 0.3 else families.complete(n2)
        j = g.join(h)
        assert j.num_edges() == g.num_edges() + h.num_edges() + g.n * h.n


def test_join_k3_o4_shape(k3_join_o4):
    g = k3_join_o4
    assert g.n == 7
    assert g.complement().num_edges() == 6  # the K4-part clique in the complement


def test_components():
    assert families.path(4).components() == [frozenset({1, 2, 3, 4})]
    assert families.empty(3).components() == [frozenset({1}), frozenset({2}), frozenset({3})]
    h = families.cycle(3).disjoint_union(families.empty(1))
    assert h.components() == [frozenset({1, 2, 3}), frozenset({4})]


def test_contract_and_delete():
    c5 = families.cycle(5)
    t = c5.contract_edge(1, 2)
    assert t.n == 4 and t.num_edges() == 4
    p = families.path(4).delete_vertex(1)
    assert sorted(p.edges()) == [(1, 2), (2, 3)]


def test_edge_list_io():
    g = families.kite5()
    text = format_edge_list(g)
    assert parse_edge_list(text).adj == g.adj
    zero_based = "5 5\n0 1\n1 2\n2 3\n3 4\n1 4\n"
    assert parse_edge_list(zero_based, indexing=0).adj == g.adj
    with pytest.raises(GraphError):
        parse_edge_list("2 1\n")      # missing edge line
    with pytest.raises(GraphError):
        parse_edge_list("2 1\n1 1\n")  # self loop


def test_graph_validation():
    with pytest.raises(GraphError):
        Graph(2, (0, 2, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph.from_edges(2, [(1, 3)])
