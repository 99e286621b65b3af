import networkx as nx
import pytest

from conftest import from_nx
from sqwalk.catalog import BEINEKE_EDGES, CATALOG_NAMES, barbell, beineke, named_graph
from sqwalk.classify import find_krausz_partition, is_line_graph
from sqwalk.errors import BadParamsError, UnknownNameError
from sqwalk.graph import are_isomorphic


def test_fixed_numbering():
    assert named_graph("fig1").edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4))
    assert named_graph("claw").edges == ((0, 1), (0, 2), (0, 3))
    assert barbell().edges == ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5))


def test_lookup_forms():
    assert named_graph("cycle", 5) == named_graph("cycle(5)")
    assert named_graph("complete_bipartite(2,3)").edge_count == 6
    assert named_graph("barbell").n == 6 and named_graph("barbell(4)").n == 8
    with pytest.raises(UnknownNameError):
        named_graph("petersen")
    with pytest.raises(BadParamsError):
        named_graph("cycle", 2)
    with pytest.raises(BadParamsError):
        named_graph("beineke", 10)
    with pytest.raises(BadParamsError):
        named_graph("fig1", 1)
    for name in CATALOG_NAMES:
        assert isinstance(name, str)


@pytest.mark.parametrize("i", range(1, 10))
def test_beineke_graphs_are_minimal_non_line_graphs(i):
    g = beineke(i)
    assert g.is_connected()
    assert find_krausz_partition(g) is None
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        sub = g.induced(rest)
        # every vertex-deleted subgraph (per component) is a line graph
        for comp in sub.components():
            assert find_krausz_partition(sub.induced(comp)) is not None


def test_beineke_list_is_complete_up_to_six_vertices():
    # minimal non-line graphs among all graphs on <= 6 vertices
    found = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > 6 or not nx.is_connected(h):
            continue
        g = from_nx(h)
        if find_krausz_partition(g) is not None:
            continue
        if all(is_line_graph(g.induced([u for u in range(g.n) if u != v]).induced(c), cross_check=False)
               for v in range(g.n)
               for c in g.induced([u for u in range(g.n) if u != v]).components()):
            found.append(g)
    assert len(found) == 9
    for g in found:
        assert sum(are_isomorphic(g, beineke(i)) for i in BEINEKE_EDGES) == 1
