"""Tests for core/patterns.py: catalog loading and induced-subgraph matching."""

import itertools

import pytest
from networkx.algorithms import isomorphism

from config.settings import PATTERN_CATALOG_FILE
from conftest import to_networkx
from core.canonical import canonical_key
from core.graph import Graph, complement, disjoint_union, random_graph
from core.patterns import (
    Pattern,
    PatternCatalogError,
    catalog_hash,
    find_induced,
    load_catalog,
    parse_catalog,
    verify_embedding,
)


def test_catalog_contents(catalog):
    assert catalog.families["omega_psi"] == ["C4", "P4", "P3+K2", "3K2"]
    assert catalog.families["golden"] == ["C4", "P4", "P3+K2", "3K2", "3P3", "D", "2D", "C5"]
    assert catalog.get("D").graph.edge_count == 5
    assert catalog.get("3P3").order == 9
    assert len(catalog.sha256) == 64
    assert catalog_hash() == catalog.sha256


def test_catalog_hash_tracks_edits(tmp_path):
    text = "order=2 K2: 0-1\nfamily=f: K2\n"
    first = tmp_path / "a.txt"
    second = tmp_path / "b.txt"
    first.write_text(text, encoding="utf-8")
    second.write_text(text + "# edited\n", encoding="utf-8")
    assert load_catalog(first).sha256 != load_catalog(second).sha256


@pytest.mark.parametrize("text, line", [
    ("order=2 K2: 0-1\norder=2 K2: 0-1\n", 2),
    ("order=2 K2: 0-2\n", 1),
    ("order=2 K2: 0-0\n", 1),
    ("order=2 K2: 0-1\nfamily=f: K3\n", 2),
    ("something else\n", 1),
])
def test_catalog_errors_carry_line_numbers(text, line):
    with pytest.raises(PatternCatalogError) as info:
        parse_catalog(text)
    assert info.value.line_number == line


def test_missing_catalog(tmp_path):
    with pytest.raises(PatternCatalogError):
        load_catalog(tmp_path / "absent.txt")


def test_unknown_family(catalog):
    with pytest.raises(KeyError):
        catalog.family("no_such_family")


# =============================================================================
# MATCHING
# =============================================================================

def test_matching_examples(named, catalog):
    assert find_induced(named["C4"], catalog.get("P3")) == (0, 1, 2)
    assert find_induced(named["K4"], catalog.get("C4")) is None
    assert find_induced(named["2D"], catalog.get("3K2")) is None
    assert find_induced(named["C5"], catalog.get("P4")) is not None


def test_pattern_larger_than_host(named, catalog):
    assert find_induced(named["P4"], catalog.get("3P3")) is None


def test_embedding_is_verified_and_lex_least(catalog):
    p4 = catalog.get("P4")
    g = Graph.cycle(6)
    embedding = find_induced(g, p4)
    assert verify_embedding(g, p4, embedding)
    every = [e for e in itertools.permutations(range(6), 4) if verify_embedding(g, p4, e)]
    assert embedding == min(every)


def test_matching_agrees_with_networkx(rng, catalog):
    for _ in range(30):
        g = random_graph(7, 0.45, rng)
        for name in ("P4", "C4", "P3+K2", "3K2"):
            pattern = catalog.get(name)
            matcher = isomorphism.GraphMatcher(to_networkx(g), to_networkx(pattern.graph))
            assert (find_induced(g, pattern) is not None) == matcher.subgraph_is_isomorphic()


def test_matching_complement_symmetry(rng, catalog):
    # P4 is self-complementary: G has an induced P4 iff its complement does
    for _ in range(20):
        g = random_graph(6, 0.5, rng)
        p4 = catalog.get("P4")
        assert (find_induced(g, p4) is None) == (find_induced(complement(g), p4) is None)


def test_pattern_validation():
    with pytest.raises(ValueError):
        Pattern("bad", 2, ((0, 2),))


# =============================================================================
# UNIONS
# =============================================================================

def test_two_diamonds_built_from_catalog_d(catalog):
    d = catalog.graph("D")
    assert canonical_key(catalog.graph("2D")) == canonical_key(disjoint_union(d, d))
    assert catalog.get("3P3").edges == ((0, 1), (1, 2), (3, 4), (4, 5), (6, 7), (7, 8))


def test_overridden_d_carries_into_2d(tmp_path):
    text = PATTERN_CATALOG_FILE.read_text(encoding="utf-8").replace(
        "order=4 D: 0-1, 0-2, 0-3, 1-2, 1-3", "order=4 D: 0-1, 1-2, 0-2, 2-3")
    custom = tmp_path / "paw.txt"
    custom.write_text(text, encoding="utf-8")
    catalog = load_catalog(custom)
    paw = catalog.graph("D")
    assert paw.edge_count == 4
    assert catalog.get("2D").order == 8
    assert canonical_key(catalog.graph("2D")) == canonical_key(disjoint_union(paw, paw))
    assert [p.name for p in catalog.family("b_grundy")] == ["P4", "3P3", "2D"]


@pytest.mark.parametrize("text, line", [
    ("order=2 K2: 0-1\nunion=2K2: K2, K3\n", 2),
    ("order=2 K2: 0-1\nunion=K2: K2, K2\n", 2),
    ("order=2 K2: 0-1\nunion=E: \n", 2),
])
def test_union_errors_carry_line_numbers(text, line):
    with pytest.raises(PatternCatalogError) as info:
        parse_catalog(text)
    assert info.value.line_number == line
