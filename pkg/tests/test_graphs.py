from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import exhaustive_k_connected, random_graph, subdivision_planarity
from tsgkit.graphs import (
    GraphError,
    SimpleGraph,
    complete_graph,
    degree_sequence,
    emit_graph_file,
    graph_from_record,
    induced_subgraph,
    is_connected,
    is_k_connected,
    is_planar,
    parse_graph_file,
    triangles,
)


def test_constructor_rejects_loops_duplicates_unknowns():
    with pytest.raises(GraphError, match="loop"):
        SimpleGraph.make("ab", [("a", "a")])
    with pytest.raises(GraphError, match="duplicate edge"):
        SimpleGraph.make("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(GraphError, match="unknown vertex"):
        SimpleGraph.make("ab", [("a", "c")])
    with pytest.raises(GraphError, match="duplicate vertex"):
        SimpleGraph.make("aa", [])


def test_isolated_vertices_are_legal():
    g = SimpleGraph.make("abc", [("a", "b")])
    assert g.n == 3 and g.m == 1
    assert degree_sequence(g)["c"] == 0


def test_degree_sequence_examples(catalog):
    k7 = catalog.members["K7"]
    assert set(degree_sequence(k7).values()) == {6}
    h8 = degree_sequence(catalog.members["H8"])
    assert h8["a"] == 3
    assert all(h8[v] == 5 for v in "bcd")
    assert all(h8[v] == 6 for v in "efgh")
    single = SimpleGraph.make("uv", [("u", "v")])
    assert degree_sequence(single) == {"u": 1, "v": 1}


def test_degree_sum_is_twice_edges(catalog):
    for g in catalog.members.values():
        assert sum(degree_sequence(g).values()) == 2 * g.m


def test_induced_subgraph_examples(catalog):
    k7 = catalog.members["K7"]
    k4 = induced_subgraph(k7, "efgh")
    assert k4.n == 4 and k4.m == 6
    h8 = catalog.members["H8"]
    sub = induced_subgraph(h8, "aefgh")
    assert sub.m == 6  # complete on efgh, a isolated
    assert degree_sequence(sub)["a"] == 0
    empty = induced_subgraph(h8, [])
    assert empty.n == 0 and empty.m == 0
    with pytest.raises(GraphError, match="unknown"):
        induced_subgraph(h8, ["z"])


def test_connectivity_examples(catalog):
    assert is_k_connected(catalog.members["H8"], 3)
    path3 = SimpleGraph.make("abc", [("a", "b"), ("b", "c")])
    assert not is_k_connected(path3, 2)
    two_k4 = SimpleGraph.make(
        "abcdefgh",
        [(u, v) for u, v in [("a","b"),("a","c"),("a","d"),("b","c"),("b","d"),("c","d"),
                             ("e","f"),("e","g"),("e","h"),("f","g"),("f","h"),("g","h")]],
    )
    assert not is_connected(two_k4)
    with pytest.raises(GraphError):
        is_k_connected(path3, 0)
    with pytest.raises(GraphError):
        is_k_connected(path3, 3)


def test_all_catalog_graphs_are_3_connected(catalog):
    for name, g in catalog.members.items():
        assert is_k_connected(g, 3), name
        assert exhaustive_k_connected(g, 3), name


def test_k_connectivity_matches_exhaustive_removal(catalog):
    for name in ("K7", "H8", "H12", "Np10", "C14"):
        g = catalog.members[name]
        for k in (1, 2, 3, 4, 5):
            if g.n > k:
                assert is_k_connected(g, k) == exhaustive_k_connected(g, k), (name, k)


def test_planarity_examples(catalog):
    k5 = complete_graph("abcde")
    assert not is_planar(k5)
    assert is_planar(complete_graph("abcd"))
    # fixed vertices of the swap (b c) on H8 induce a K5 plus a pendant
    h8 = catalog.members["H8"]
    sub = induced_subgraph(h8, "adefgh")
    assert not is_planar(sub)


def test_planarity_agrees_with_subdivision_oracle_sample():
    rng = random.Random(20250811)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 8), rng.random())
        assert is_planar(g) == subdivision_planarity(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 8), st.random_module())
def test_planarity_oracle_property(n, rnd):
    rng = random.Random(rnd.seed)
    g = random_graph(rng, n, rng.uniform(0.2, 0.9))
    assert is_planar(g) == subdivision_planarity(g)


def test_triangles_of_k4():
    assert len(triangles(complete_graph("abcd"))) == 4


def test_graph_file_round_trip(tmp_path, catalog):
    h9 = catalog.members["H9"]
    path = tmp_path / "H9.json"
    path.write_text(emit_graph_file(h9, "H9"))
    parsed = parse_graph_file(path)
    assert parsed == h9
    assert parsed.n == 9 and parsed.m == 21
    # round-trips byte-identically after normalization
    assert emit_graph_file(parsed, "H9") == path.read_text()


def test_graph_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"name": "x", "vertices": ["a"], "edges": [["a", "a"]]}))
    with pytest.raises(GraphError, match="loop"):
        parse_graph_file(bad)
    bad.write_text("{not json")
    with pytest.raises(GraphError, match="line 1"):
        parse_graph_file(bad)
    bad.write_text(json.dumps({"vertices": ["a"], "edges": []}))
    with pytest.raises(GraphError, match="name"):
        parse_graph_file(bad)
    with pytest.raises(GraphError, match="not a pair"):
        graph_from_record({"name": "x", "vertices": ["a", "b"], "edges": [["a"]]})
