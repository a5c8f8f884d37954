import itertools
import json

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from linchain.graphs import (
    Graph,
    complement,
    cycle_graph,
    disjoint_union,
    find_full_embeddings,
    graph_from_json,
    is_full_embedding,
    load_graph,
    path_graph,
    vertex_key,
)

from oracles import brute_full_embeddings


@st.composite
def graphs(draw, max_vertices=7, min_vertices=0):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(range(n), chosen)


def edge_set(g):
    return {tuple(sorted(e)) for e in g.edges}


def test_graph_rejects_loops_and_stray_endpoints():
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 1)])
    with pytest.raises(ValueError):
        Graph([1, 2], [(1, 3)])


def test_multi_edges_collapse():
    g = Graph([1, 2], [(1, 2), (2, 1)])
    assert len(g.edges) == 1 and g.adjacent(2, 1)


def test_path_and_cycle_constructions():
    assert path_graph(0).order() == 0
    assert path_graph(1).order() == 1 and not path_graph(1).edges
    assert edge_set(path_graph(4)) == {(1, 2), (2, 3), (3, 4)}
    assert edge_set(cycle_graph(3)) == {(1, 2), (2, 3), (1, 3)}
    for m in (0, 1, 2):
        with pytest.raises(ValueError):
            cycle_graph(m)
    with pytest.raises(ValueError):
        path_graph(-1)


def test_complement_examples():
    c = complement(path_graph(3))
    assert edge_set(c) == {(1, 3)}
    empty = Graph(range(4))
    assert edge_set(complement(empty)) == set(itertools.combinations(range(4), 2))


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    assert complement(g).vertices == g.vertices
    assert not (complement(g).edges & g.edges)


def test_disjoint_union_labels():
    u = disjoint_union(path_graph(2), path_graph(2))
    assert u.vertices == {(0, 1), (0, 2), (1, 1), (1, 2)}
    assert u.adjacent((0, 1), (0, 2)) and not u.adjacent((0, 1), (1, 2))


def test_isolated_vertices_and_degrees():
    g = Graph([1, 2, 3], [(1, 2)])
    assert g.isolated_vertices() == [3]
    assert g.degree(1) == 1 and g.degree(3) == 0


def test_vertex_key_orders_mixed_labels():
    assert sorted([("a",), "b", 3, 1], key=vertex_key) == [1, 3, "b", ("a",)]


def test_full_embedding_examples():
    assert len(find_full_embeddings(path_graph(2), path_graph(3))) == 4
    assert find_full_embeddings(path_graph(3), cycle_graph(3)) == []
    assert find_full_embeddings(path_graph(2), complement(path_graph(2))) == []
    assert find_full_embeddings(Graph(), path_graph(2)) == [{}]


def test_full_embeddings_order_is_deterministic():
    a = find_full_embeddings(path_graph(2), cycle_graph(5))
    b = find_full_embeddings(path_graph(2), cycle_graph(5))
    assert a == b
    assert [tuple(f.values()) for f in a] == sorted(tuple(f.values()) for f in a)


def _as_items(maps):
    return {tuple(sorted(f.items(), key=repr)) for f in maps}


@settings(max_examples=150, deadline=None)
@given(graphs(max_vertices=4), graphs(max_vertices=7))
def test_full_embeddings_match_brute_force(pattern, host):
    found = find_full_embeddings(pattern, host)
    assert len(found) == len(_as_items(found))
    expected = brute_full_embeddings(
        pattern.sorted_vertices(), pattern.adjacent, host.sorted_vertices(), host.adjacent
    )
    assert _as_items(found) == expected
    for f in found:
        assert is_full_embedding(f, pattern, host)


def test_full_embeddings_exhaustive_small_atlas():
    atlas = [Graph(g.nodes, g.edges) for g in nx.graph_atlas_g()[1:53]]
    patterns = [g for g in atlas if g.order() <= 3]
    for host in atlas:
        for pattern in patterns:
            expected = brute_full_embeddings(
                pattern.sorted_vertices(), pattern.adjacent, host.sorted_vertices(), host.adjacent
            )
            assert _as_items(find_full_embeddings(pattern, host)) == expected


def test_is_full_embedding_rejects_partial_and_non_injective():
    p2, p3 = path_graph(2), path_graph(3)
    assert is_full_embedding({1: 1, 2: 2}, p2, p3)
    assert not is_full_embedding({1: 1}, p2, p3)
    assert not is_full_embedding({1: 1, 2: 1}, p2, p3)
    assert not is_full_embedding({1: 1, 2: 3}, p2, p3)
    assert not is_full_embedding({1: 1, 2: 9}, p2, p3)


def test_graph_json_conventions(tmp_path):
    doc = {"vertices": ["a", "b", "c"], "edges": [["a", "b"]], "convention": "commutation"}
    g = graph_from_json(doc)
    assert edge_set(g) == {("a", "c"), ("b", "c")}
    doc["convention"] = "anticommutation"
    assert edge_set(graph_from_json(doc)) == {("a", "b")}
    path = tmp_path / "g.json"
    path.write_text(json.dumps(doc))
    assert load_graph(path) == graph_from_json(doc)
    with pytest.raises(ValueError):
        graph_from_json({"vertices": ["a"], "convention": "other"})
    with pytest.raises(ValueError):
        graph_from_json({"edges": []})


@given(graphs())
def test_to_json_round_trips(g):
    doc = g.to_json()
    back = graph_from_json(json.loads(json.dumps(doc)))
    assert back == Graph([str(v) for v in g.vertices], [(str(u), str(v)) for u, v in g.sorted_edges()])
