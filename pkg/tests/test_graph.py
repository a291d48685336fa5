import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gparking.errors import DisconnectedGraphError, GraphError
from gparking.graph import (ColoredEdge, build_multigraph, classify_edge, complete_graph,
                            contract_edge, count_spanning_trees, delete_edge, load_json,
                            outdeg, path_graph)

from oracles import spanning_tree_edge_sets


def multigraphs(max_vertices=5, max_edges=8):
    @st.composite
    def build(draw):
        k = draw(st.integers(1, max_vertices))
        edges = draw(st.lists(st.tuples(st.integers(0, k - 1), st.integers(0, k - 1)),
                              max_size=max_edges))
        return build_multigraph(k, edges)
    return build()


def connected_multigraphs(**kw):
    return multigraphs(**kw).filter(lambda G: G.is_connected())


def test_build_fig1(gstar):
    assert gstar.vertex_count == 4
    assert gstar.total_edges == 5
    assert gstar.mu[0] == (0, 1, 0, 1)


def test_build_single_vertex():
    G = build_multigraph(1, [])
    assert G.total_edges == 0 and G.n == 0 and G.is_connected()


def test_build_parallel_and_loop():
    G = build_multigraph(2, [(0, 1), (0, 1), (1, 1)])
    assert G.mu[0][1] == G.mu[1][0] == 2
    assert G.mu[1][1] == 1
    assert G.total_edges == 3


def test_build_rejects_out_of_range():
    with pytest.raises(GraphError):
        build_multigraph(2, [(0, 2)])


def test_json_round_trip(gstar):
    assert load_json(gstar.to_json()) == gstar
    with pytest.raises(GraphError):
        load_json("{nope")
    with pytest.raises(GraphError):
        load_json('{"edges": []}')


def test_outdeg_examples(gstar):
    assert outdeg(gstar, {1, 2, 3}, 3) == 1
    assert outdeg(gstar, {1}, 1) == 3
    G = build_multigraph(2, [(0, 1), (1, 1), (1, 1)])
    H = build_multigraph(2, [(1, 1)])
    assert outdeg(H, {1}, 1) == 0
    assert outdeg(G, {1}, 1) == 1
    with pytest.raises(GraphError):
        outdeg(gstar, {1, 2}, 3)


def test_classify_examples(gstar):
    assert classify_edge(gstar, ColoredEdge(0, 1, 0)) == "ordinary"
    assert classify_edge(path_graph(2), ColoredEdge(0, 1, 0)) == "bridge"
    G = build_multigraph(2, [(0, 1), (1, 1)])
    assert classify_edge(G, ColoredEdge(1, 1, 0)) == "loop"
    with pytest.raises(GraphError):
        classify_edge(gstar, ColoredEdge(0, 2, 0))
    with pytest.raises(GraphError):
        classify_edge(gstar, ColoredEdge(0, 1, 1))


def test_contract_examples(gstar):
    H = contract_edge(gstar, ColoredEdge(0, 1, 0))
    # old vertices 2, 3 are relabeled 1, 2
    assert H == build_multigraph(3, [(0, 1), (0, 2), (0, 2), (1, 2)])
    assert H.total_edges == 4
    two = contract_edge(build_multigraph(2, [(0, 1), (0, 1)]), ColoredEdge(0, 1, 0))
    assert two == build_multigraph(1, [(0, 0)])
    assert contract_edge(path_graph(2), ColoredEdge(0, 1, 0)) == build_multigraph(1, [])
    with pytest.raises(GraphError):
        contract_edge(build_multigraph(2, [(0, 1), (1, 1)]), ColoredEdge(1, 1, 0))


def test_contract_non_root_edge():
    G = build_multigraph(4, [(0, 1), (1, 3), (2, 3), (3, 3)])
    H = contract_edge(G, ColoredEdge(1, 3, 0))
    assert H == build_multigraph(3, [(0, 1), (1, 2), (1, 1)])


def test_delete_examples(gstar):
    H = delete_edge(gstar, ColoredEdge(0, 1, 0))
    assert H == build_multigraph(4, [(0, 3), (1, 2), (1, 3), (2, 3)])
    G = build_multigraph(2, [(0, 1), (1, 1)])
    assert delete_edge(G, ColoredEdge(1, 1, 0)).total_edges == 1
    K = delete_edge(gstar, ColoredEdge(2, 3, 0))
    assert K.total_edges == 4 and K.is_connected()


def test_count_spanning_trees_examples(gstar):
    assert count_spanning_trees(gstar) == 8
    assert count_spanning_trees(complete_graph(4)) == 16
    assert count_spanning_trees(build_multigraph(1, [])) == 1
    with pytest.raises(DisconnectedGraphError):
        count_spanning_trees(build_multigraph(3, [(0, 1)]))


def test_count_matches_brute_force(tiny_corpus):
    for G in tiny_corpus:
        assert count_spanning_trees(G) == len(spanning_tree_edge_sets(G))


@settings(max_examples=150, deadline=None)
@given(connected_multigraphs())
def test_spanning_tree_recursion(G):
    for e in G.edges():
        if e.is_loop or e.color:
            continue
        kind = classify_edge(G, e)
        t = count_spanning_trees(G)
        contracted = count_spanning_trees(contract_edge(G, e))
        if kind == "bridge":
            assert t == contracted
        else:
            assert t == contracted + count_spanning_trees(delete_edge(G, e))


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_contraction_drops_exactly_one_edge(G):
    for e in G.edges():
        if not e.is_loop:
            assert contract_edge(G, e).total_edges == G.total_edges - 1
            assert contract_edge(G, e).vertex_count == G.vertex_count - 1


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_singleton_outdeg_is_degree_minus_loops(G):
    for v in range(1, G.vertex_count):
        assert outdeg(G, {v}, v) == G.degree(v) - 2 * G.loops(v)


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_bridges_are_exactly_disconnecting_edges(G):
    def components(H):
        seen, count = set(), 0
        for v in H.vertices:
            if v not in seen:
                seen |= H.component_of(v)
                count += 1
        return count

    for e in G.edges():
        grows = components(delete_edge(G, e)) > components(G)
        assert (classify_edge(G, e) == "bridge") == grows
