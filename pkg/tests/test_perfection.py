"""Tests for core/perfection.py: ab-perfection, witnesses and obstruction mining."""

import pytest

from core.canonical import canonical_key
from core.graph import Graph, delete_vertex, emit_graph6, mask_of, random_graph
from core.perfection import (
    PerfectionChecker,
    check_obstruction,
    is_ab_perfect,
    minimal_obstructions,
)
from core.profile import Parameter as P
from core.profile import full_profile
from core.recognizers import is_chordal
from database.profile_cache import ProfileCache


def keys_of(graphs):
    return {canonical_key(g) for g in graphs}


def catalog_keys(catalog, *names):
    return {canonical_key(catalog.graph(name)) for name in names}


# =============================================================================
# AB-PERFECTION
# =============================================================================

def test_four_cycle_fails_on_itself(named):
    result = is_ab_perfect(named["C4"], P.OMEGA, P.PSI)
    assert not result.perfect
    assert result.witness_vertices() == [0, 1, 2, 3]
    assert (result.a_value, result.b_value) == (2, 3)


def test_witness_is_least_failing_subset(named):
    result = is_ab_perfect(named["P5"], P.OMEGA, P.PSI)
    assert result.witness == mask_of([0, 1, 2, 3])
    assert result.to_dict() == {"perfect": False, "witness": [0, 1, 2, 3], "a": 2, "b": 3}


@pytest.mark.parametrize("name", ["K1", "K5", "D", "K1,3"])
def test_perfect_examples(named, name):
    result = is_ab_perfect(named[name], P.OMEGA, P.PSI)
    assert result.perfect and bool(result)
    assert result.to_dict() == {"perfect": True}


def test_identical_parameters_rejected(named):
    with pytest.raises(ValueError):
        is_ab_perfect(named["C4"], P.OMEGA, P.OMEGA)


def test_omega_hadwiger_perfection_matches_chordality(rng, cache):
    checker = PerfectionChecker(cache)
    for _ in range(30):
        g = random_graph(int(rng.integers(1, 7)), 0.5, rng)
        assert checker.is_perfect(g, P.OMEGA, P.HADWIGER) == is_chordal(g).member


def test_checker_reuses_cache(named, cache):
    checker = PerfectionChecker(cache)
    checker.is_perfect(named["C6"], P.OMEGA, P.CHI)
    misses = cache.misses
    PerfectionChecker(cache).is_perfect(named["C6"], P.OMEGA, P.CHI)
    assert cache.misses == misses
    assert cache.hits > 0


# =============================================================================
# OBSTRUCTION MINING
# =============================================================================

def test_omega_psi_obstructions(catalog, cache):
    found = minimal_obstructions(P.OMEGA, P.PSI, 6, cache)
    assert keys_of(found) == catalog_keys(catalog, "C4", "P4", "P3+K2", "3K2")
    assert [g.n for g in found] == sorted(g.n for g in found)


def test_omega_achromatic_obstructions(catalog, cache):
    found = minimal_obstructions(P.OMEGA, P.ALPHA, 6, cache)
    assert keys_of(found) == catalog_keys(catalog, "P4", "P3+K2", "3K2")
    assert sorted(emit_graph6(g) for g in found) == sorted(["CL", "D@o", "E@Q?"])


@pytest.mark.parametrize("a, b", [
    (P.OMEGA, P.PSI), (P.OMEGA, P.ALPHA), (P.OMEGA, P.HADWIGER),
    (P.OMEGA, P.PSEUDO_GRUNDY), (P.B_CHROMATIC, P.PSEUDO_GRUNDY), (P.CHI, P.GRUNDY),
])
def test_mined_obstructions_are_rechecked_minimal(cache, a, b):
    found = minimal_obstructions(a, b, 6, cache)
    assert found
    for g in found:
        # fresh cache, so nothing computed while mining is reused
        check = check_obstruction(g, a, b, ProfileCache())
        assert check.passed, check.to_dict()
        profile = full_profile(g)
        assert profile.value(a) != profile.value(b)
        for v in range(g.n):
            smaller = delete_vertex(g, v)
            assert is_ab_perfect(smaller, a, b).perfect


def test_omega_pseudo_grundy_obstructions(catalog, cache):
    found = minimal_obstructions(P.OMEGA, P.PSEUDO_GRUNDY, 6, cache)
    assert keys_of(found) == catalog_keys(catalog, "C4", "P4")


def test_omega_hadwiger_obstructions_are_holes(catalog, cache):
    found = minimal_obstructions(P.OMEGA, P.HADWIGER, 6, cache)
    assert keys_of(found) == catalog_keys(catalog, "C4", "C5", "C6")


def test_b_pseudo_grundy_obstructions(catalog, cache):
    found = minimal_obstructions(P.B_CHROMATIC, P.PSEUDO_GRUNDY, 6, cache)
    assert keys_of(found) == catalog_keys(catalog, "C4", "P4")


def test_omega_grundy_small_obstructions(catalog, cache):
    # Γ(C4) = ω(C4) = 2, so C4 is not an (ω, Γ) obstruction
    assert full_profile(catalog.graph("C4")).grundy == 2
    found = keys_of(minimal_obstructions(P.OMEGA, P.GRUNDY, 4, cache))
    assert canonical_key(catalog.graph("P4")) in found
    assert canonical_key(catalog.graph("C4")) not in found


def test_mining_from_source_skips_large_and_duplicate_graphs(named, cache):
    source = [named["C4"], Graph.cycle(4), named["C5"], named["K1"]]
    found = minimal_obstructions(P.OMEGA, P.HADWIGER, 4, cache, source=source)
    assert [emit_graph6(g) for g in found] == [canonical_key(named["C4"])]


def test_mining_rejects_identical_parameters():
    with pytest.raises(ValueError):
        minimal_obstructions(P.PSI, P.PSI, 3)


# =============================================================================
# TARGETED CHECKS
# =============================================================================

def test_four_cycle_is_minimal(named, cache):
    check = check_obstruction(named["C4"], P.OMEGA, P.PSI, cache, name="C4")
    assert check.passed
    assert check.to_dict()["pair"] == ["omega", "psi"]


def test_non_minimal_obstruction_names_failing_subgraph(named, cache):
    check = check_obstruction(named["C5"], P.OMEGA, P.PSI, cache)
    assert check.differs and not check.minimal and not check.passed
    assert check.failing_subgraph is not None


def test_equal_values_do_not_pass(named, cache):
    check = check_obstruction(named["K5"], P.OMEGA, P.PSI, cache)
    assert not check.differs and not check.passed


@pytest.mark.slow
@pytest.mark.parametrize("name", ["P4", "3P3", "2D"])
def test_b_grundy_family_is_minimal(catalog, cache, name):
    check = check_obstruction(catalog.graph(name), P.B_CHROMATIC, P.GRUNDY, cache, name=name)
    assert check.passed, check.to_dict()


@pytest.mark.slow
def test_double_diamond_values(named, cache):
    check = check_obstruction(named["2D"], P.B_CHROMATIC, P.PSEUDO_GRUNDY, cache, name="2D")
    assert (check.a_value, check.b_value) == (4, 3)
    assert check.passed
