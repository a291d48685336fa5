import itertools

import pytest

from gparking import build_multigraph, count_spanning_trees, path_graph
from gparking.errors import DisconnectedGraphError, NotParkingError, RootValueError
from gparking.parking import (check_parking, enumerate_parking, is_parking,
                              is_parking_bruteforce, is_parking_fast, weight_w)

from conftest import F, TABLE1
from oracles import is_parking_subsets


def test_is_parking_examples(gstar):
    assert is_parking(gstar, (-1, 0, 0, 2))
    assert not is_parking(gstar, (-1, 0, 2, 0))
    assert not is_parking_subsets(gstar, (-1, 0, 2, 0))
    for G in (gstar, path_graph(3), build_multigraph(3, [(0, 1), (1, 2), (2, 2), (0, 2)])):
        assert is_parking(G, (-1,) + (0,) * G.n)


def test_root_value_reported_separately(gstar):
    with pytest.raises(RootValueError):
        check_parking(gstar, (0, 0, 0, 0))
    with pytest.raises(NotParkingError) as info:
        check_parking(gstar, (-1, 0, 2, 0))
    assert not isinstance(info.value, RootValueError)
    check_parking(gstar, F[3])


def test_disconnected_rejected():
    G = build_multigraph(3, [(0, 1), (2, 2)])
    with pytest.raises(DisconnectedGraphError):
        enumerate_parking(G)
    with pytest.raises(DisconnectedGraphError):
        is_parking(G, (-1, 0, 0))


def test_enumerate_fig1(gstar):
    assert enumerate_parking(gstar) == [row[0] for row in TABLE1]


def test_enumerate_base_cases():
    assert enumerate_parking(build_multigraph(1, [])) == [(-1,)]
    assert enumerate_parking(path_graph(2)) == [(-1, 0)]
    assert enumerate_parking(build_multigraph(2, [(0, 1), (0, 1), (1, 1)])) == [(-1, 0), (-1, 1)]


def test_weight_examples(gstar):
    assert weight_w(gstar, F[1]) == 2
    assert weight_w(gstar, F[8]) == 0
    assert weight_w(path_graph(2), (-1, 0)) == 0


def test_fast_path_agrees_with_subset_test(small_corpus):
    """Every labeling with -1 <= f(v) <= deg(v), every graph on <= 4 vertices, <= 6 edges."""
    checked = 0
    for G in small_corpus:
        boxes = [range(-1, G.degree(v) + 1) for v in range(1, G.vertex_count)]
        for tail in itertools.product(*boxes):
            f = (-1,) + tail
            assert is_parking_fast(G, f) == is_parking_bruteforce(G, f), (G, f)
            checked += 1
    assert checked > 100_000


def test_bruteforce_matches_independent_reading(tiny_corpus):
    for G in tiny_corpus:
        boxes = [range(-1, G.degree(v) + 1) for v in range(1, G.vertex_count)]
        for tail in itertools.product(*boxes):
            f = (-1,) + tail
            assert is_parking_bruteforce(G, f) == is_parking_subsets(G, f)


def test_count_equals_spanning_trees(small_corpus):
    for G in small_corpus:
        assert len(enumerate_parking(G)) == count_spanning_trees(G)


def test_enumeration_is_sorted_and_unique(small_corpus):
    for G in small_corpus[::7]:
        fs = enumerate_parking(G)
        assert fs == sorted(set(fs))


def test_decrementing_a_value_stays_parking(small_corpus):
    for G in small_corpus:
        fs = set(enumerate_parking(G))
        for f in fs:
            for v in range(1, G.vertex_count):
                if f[v] > 0:
                    g = list(f)
                    g[v] -= 1
                    assert tuple(g) in fs


def test_min_weight_counts_loops(small_corpus):
    # loops never enter the subset condition, so each one adds 1 to every w(f)
    seen_loopless = 0
    for G in small_corpus:
        loops = sum(G.loops(v) for v in G.vertices)
        ws = [weight_w(G, f) for f in enumerate_parking(G)]
        assert min(ws) == loops
        seen_loopless += loops == 0
    assert seen_loopless > 100
