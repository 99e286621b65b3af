import pytest

from sqwalk.catalog import barbell, complete, complete_bipartite, cycle, named_graph, path
from sqwalk.classify import (
    CLASS1,
    CLASS2A,
    CLASS2B,
    CLASS2B_PRIME,
    check_two_b_prime,
    classify_graph,
    clique_graph_is_root,
    find_krausz_partition,
    is_line_graph,
    root_graph,
    verify_evidence,
    verify_two_b_prime,
)
from sqwalk.errors import DisconnectedError, TooLargeError
from sqwalk.graph import Graph, are_isomorphic, clique_graph, is_diamond_free, line_graph, two_coloring
from sqwalk.tessellation import covering_tessellation_pairs, intersection_edges, is_two_tessellable


def test_named_classes():
    assert classify_graph(named_graph("fig1")).label == CLASS2A
    assert classify_graph(named_graph("hajos")).label == CLASS2A
    assert classify_graph(cycle(4)).label == CLASS2B_PRIME
    assert classify_graph(named_graph("claw")).label == CLASS1
    # two triangles and a bridge: line graph of a tree
    assert classify_graph(barbell()).label == CLASS2B
    # root is the claw; odd order rules out a perfect matching
    assert classify_graph(complete(3)).label == CLASS2B


def test_triangle_root_is_the_claw():
    root, edge_of = root_graph(complete(3))
    assert are_isomorphic(root, named_graph("claw"))
    assert are_isomorphic(line_graph(root)[0], complete(3))


def test_krausz_partition_properties():
    kp = find_krausz_partition(named_graph("fig1"))
    assert kp.coloring is None
    seen = {}
    for el in kp.elements:
        for v in el:
            seen[v] = seen.get(v, 0) + 1
    assert set(seen.values()) == {2}
    assert find_krausz_partition(named_graph("claw")) is None
    with pytest.raises(TooLargeError):
        find_krausz_partition(cycle(50))


def test_atlas_recognisers_and_round_trip(atlas):
    for g in atlas:
        line = is_line_graph(g)  # cross-check raises on disagreement
        r = root_graph(g)
        assert (r is not None) == line
        if r is not None:
            root, edge_of = r
            if root.edges:
                assert are_isomorphic(line_graph(root)[0], g)
                assert sorted(edge_of) == sorted(root.edges)


def test_atlas_classification_evidence(atlas):
    counts = {}
    for g in atlas:
        ev = classify_graph(g)
        counts[ev.label] = counts.get(ev.label, 0) + 1
        assert verify_evidence(g, ev)
        if ev.label in (CLASS2B, CLASS2B_PRIME):
            k, _ = clique_graph(g)
            assert is_diamond_free(g) and two_coloring(k) is not None
        if ev.label == CLASS2B_PRIME:
            assert verify_two_b_prime(g, ev.two_b_prime)
    assert set(counts) == {CLASS1, CLASS2A, CLASS2B, CLASS2B_PRIME}


def test_class1_tessellations_always_share_edges(atlas):
    for g in atlas:
        if g.n > 6 or not g.edges or classify_graph(g).label != CLASS1 or not is_two_tessellable(g):
            continue
        for pair in covering_tessellation_pairs(g):
            assert intersection_edges(pair)


def test_two_b_prime_examples():
    ev = check_two_b_prime(cycle(6))
    assert ev is not None and verify_two_b_prime(cycle(6), ev)
    assert check_two_b_prime(path(3)) is None
    assert check_two_b_prime(complete_bipartite(2, 2)) is not None
    # a matching edge inside a triangle is rejected
    assert check_two_b_prime(complete(4)) is None


def test_disconnected_rejected():
    with pytest.raises(DisconnectedError):
        classify_graph(Graph(4, [(0, 1), (2, 3)]))


def test_clique_graph_root_refinement():
    assert clique_graph_is_root(cycle(5))
    assert not clique_graph_is_root(path(3))
    assert not clique_graph_is_root(complete(3))


def test_evidence_serialises():
    d = classify_graph(named_graph("claw")).to_dict()
    assert d["class"] == CLASS1 and d["beineke"]["index"] == 1
    d = classify_graph(cycle(4)).to_dict()
    assert d["matching"] and d["krausz"]["coloring"] is not None
