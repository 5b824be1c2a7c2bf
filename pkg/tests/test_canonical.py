"""Tests for core/canonical.py: canonical keys, enumeration and graph6 files."""

import itertools

import networkx as nx
import pytest

from conftest import to_networkx
from core.canonical import (
    brute_force_classes,
    canonical_form,
    canonical_key,
    canonical_labeling,
    enumerate_graphs,
    enumerate_up_to,
    exhaustive_key,
    graphs_from_file,
    read_graph6_file,
    read_graph6_lines,
    write_graph6_file,
)
from core.graph import Graph, Graph6ParseError, GraphError, emit_graph6, parse_graph6, permute, random_graph


CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


# =============================================================================
# CANONICAL KEYS
# =============================================================================

def test_key_is_invariant_under_relabeling(rng):
    for _ in range(30):
        n = int(rng.integers(2, 9))
        g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        perm = [int(v) for v in rng.permutation(n)]
        assert canonical_key(permute(g, perm)) == canonical_key(g)


def test_key_matches_exhaustive_oracle(rng):
    for _ in range(25):
        n = int(rng.integers(1, 7))
        g = random_graph(n, 0.5, rng)
        assert canonical_key(g) == exhaustive_key(g)


def test_key_separates_non_isomorphic_graphs(rng):
    graphs = [random_graph(6, 0.5, rng) for _ in range(30)]
    for g, h in itertools.combinations(graphs, 2):
        same_key = canonical_key(g) == canonical_key(h)
        assert same_key == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_canonical_form_and_labeling():
    c4 = Graph.cycle(4)
    key, order = canonical_labeling(c4)
    assert sorted(order) == [0, 1, 2, 3]
    assert emit_graph6(canonical_form(c4)) == key
    assert parse_graph6(key) == canonical_form(c4)


def test_exhaustive_key_limit():
    with pytest.raises(GraphError):
        exhaustive_key(Graph.empty(9))


# =============================================================================
# ENUMERATION
# =============================================================================

@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_class_counts(n):
    keys = [emit_graph6(g) for g in enumerate_graphs(n)]
    assert len(keys) == CLASS_COUNTS[n]
    assert keys == sorted(keys)
    assert all(canonical_key(parse_graph6(k)) == k for k in keys)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_matches_labeled_dedup(n):
    assert [emit_graph6(g) for g in enumerate_graphs(n)] == brute_force_classes(n)


def test_enumeration_matches_graph_atlas():
    atlas = nx.graph_atlas_g()
    for n in range(1, 7):
        expected = sum(1 for h in atlas if h.number_of_nodes() == n)
        assert expected == CLASS_COUNTS[n]


@pytest.mark.slow
def test_order_seven_count_matches_atlas():
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7]
    graphs = list(enumerate_graphs(7))
    assert len(graphs) == len(atlas) == 1044


def test_enumerate_single_vertex():
    assert [emit_graph6(g) for g in enumerate_graphs(1)] == ["@"]


def test_enumerate_up_to_counts():
    assert sum(1 for _ in enumerate_up_to(5)) == 1 + 2 + 4 + 11 + 34


@pytest.mark.parametrize("n", [0, 9])
def test_enumeration_order_out_of_range(n):
    with pytest.raises(GraphError):
        list(enumerate_graphs(n))


# =============================================================================
# GRAPH6 FILES
# =============================================================================

def test_read_lines_reports_errors_with_line_numbers():
    items = list(read_graph6_lines([">>graph6<<Cl\n", "\n", "not-a-graph6!!\n", "@\n"]))
    assert [line for line, _ in items] == [1, 3, 4]
    assert items[0][1] == Graph.cycle(4)
    assert isinstance(items[1][1], Graph6ParseError)
    assert items[2][1].n == 1


def test_file_round_trip(tmp_path):
    path = tmp_path / "four.g6"
    graphs = list(enumerate_graphs(4))
    assert write_graph6_file(path, graphs, header=True) == 11
    assert [g for _, g in read_graph6_file(path)] == graphs
    assert list(graphs_from_file(path, max_order=4)) == graphs


def test_graphs_from_file_errors(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("Cl\nC\n", encoding="ascii")
    with pytest.raises(Graph6ParseError, match="line 2"):
        list(graphs_from_file(bad))

    big = tmp_path / "big.g6"
    big.write_text("Cl\n", encoding="ascii")
    with pytest.raises(GraphError):
        list(graphs_from_file(big, max_order=3))
