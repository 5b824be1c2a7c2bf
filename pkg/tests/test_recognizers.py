"""Tests for core/recognizers.py: chordal, F-free, trivially perfect and Berge graphs."""

import networkx as nx
import pytest

from conftest import to_networkx
from core.graph import Graph, GraphError, complement, random_graph
from core.recognizers import (
    find_induced_cycle,
    is_berge,
    is_chordal,
    is_free,
    is_free_of,
    is_induced_cycle,
    is_trivially_perfect,
    lex_bfs,
    verify_verdict,
)


# =============================================================================
# CHORDAL GRAPHS
# =============================================================================

def test_chordal_examples(named):
    assert is_chordal(named["D"]).member
    assert is_chordal(named["K5"]).member
    assert is_chordal(named["P5"]).member
    assert not is_chordal(named["C4"]).member
    assert not is_chordal(named["K3,3"]).member


def test_chordal_witness_is_a_hole(named):
    verdict = is_chordal(named["C6"])
    assert verdict.kind == "cycle"
    assert sorted(verdict.vertices) == list(range(6))
    assert verify_verdict(named["C6"], verdict)


def test_chordal_agrees_with_networkx(rng):
    for _ in range(60):
        n = int(rng.integers(1, 10))
        g = random_graph(n, float(rng.uniform(0.3, 0.8)), rng)
        verdict = is_chordal(g)
        assert verdict.member == nx.is_chordal(to_networkx(g))
        assert verify_verdict(g, verdict)


def test_lex_bfs_visits_every_vertex_once(rng):
    g = random_graph(8, 0.5, rng)
    assert sorted(lex_bfs(g)) == list(range(8))


def test_induced_cycle_helpers():
    c5 = Graph.cycle(5)
    assert is_induced_cycle(c5, (0, 1, 2, 3, 4))
    assert not is_induced_cycle(c5, (0, 2, 4, 1, 3))
    assert not is_induced_cycle(Graph.complete(4), (0, 1, 2, 3))
    assert find_induced_cycle(Graph.complete(5)) is None
    assert find_induced_cycle(c5, min_length=5, odd_only=True) == (0, 1, 2, 3, 4)


# =============================================================================
# FORBIDDEN FAMILIES
# =============================================================================

def test_free_examples(named, catalog):
    verdict = is_free_of(named["C4"], "omega_psi", catalog)
    assert not verdict.member and verdict.pattern == "C4"
    assert is_free_of(named["K5"], "omega_psi", catalog).member
    assert is_free_of(named["D"], "omega_psi", catalog).member
    assert not is_free_of(named["2D"], "omega_psi", catalog).member


def test_free_witness_names_first_family_member(named, catalog):
    verdict = is_free(named["C5"], catalog.family("b_pseudo_grundy"))
    assert verdict.pattern == "P4"
    assert verify_verdict(named["C5"], verdict, catalog)


def test_empty_family_admits_everything(named):
    assert is_free(named["C5"], []).member


@pytest.mark.parametrize("name, expected", [
    ("K5", True), ("K1,3", True), ("D", True), ("2D", True),
    ("C4", False), ("P4", False), ("C5", False),
])
def test_trivially_perfect_examples(named, catalog, name, expected):
    assert is_trivially_perfect(named[name], catalog).member == expected


def test_trivially_perfect_graphs_are_chordal(rng, catalog):
    for _ in range(40):
        g = random_graph(7, 0.6, rng)
        if is_trivially_perfect(g, catalog).member:
            assert is_chordal(g).member


# =============================================================================
# BERGE GRAPHS
# =============================================================================

def test_odd_holes_and_antiholes(named):
    c5 = is_berge(named["C5"])
    assert c5.kind == "odd_hole" and verify_verdict(named["C5"], c5)

    c7 = is_berge(named["C7"])
    assert c7.kind == "odd_hole" and len(c7.vertices) == 7

    antihole = complement(named["C7"])
    verdict = is_berge(antihole)
    assert verdict.kind == "odd_antihole"
    assert verify_verdict(antihole, verdict)


def test_berge_examples(named):
    assert is_berge(named["C6"]).member
    assert is_berge(named["K3,3"]).member
    assert is_berge(named["C4"]).member


def test_chordal_graphs_are_berge(rng):
    for _ in range(40):
        g = random_graph(8, 0.5, rng)
        if is_chordal(g).member:
            assert is_berge(g).member


def test_berge_order_limit():
    with pytest.raises(GraphError):
        is_berge(Graph.empty(13))


def test_verdict_serialization(named):
    assert is_chordal(named["K5"]).to_dict() == {"member": True}
    data = is_chordal(named["C4"]).to_dict()
    assert data["witness"]["kind"] == "cycle"
    assert len(data["witness"]["vertices"]) == 4
