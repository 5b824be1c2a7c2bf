"""
Tests for the parameter solvers: core/cliques.py, core/colorings.py,
core/minors.py and core/profile.py.

Small graphs are checked against brute force over all set partitions.
"""

import itertools

import networkx as nx
import pytest

from conftest import to_networkx
from core.canonical import enumerate_up_to
from core.cliques import chromatic_number, clique_number, max_clique, proper_coloring
from core.colorings import (
    ColoringPartition,
    achromatic_number,
    b_chromatic_coloring,
    b_chromatic_number,
    edge_bound,
    find_partition,
    grundy_coloring,
    grundy_number,
    grundy_number_by_orderings,
    m_degree,
    pseudo_b_chromatic_number,
    pseudo_grundy_coloring,
    pseudo_grundy_number,
    pseudoachromatic_coloring,
    pseudoachromatic_number,
)
from core.graph import Graph, GraphError, delete_vertex, emit_graph6, mask_of, permute, random_graph
from core.minors import connected_complete_coloring, hadwiger_minor, hadwiger_number, hadwiger_via_coloring
from core.profile import (
    PARAMETER_SOLVERS,
    ConsistencyError,
    Parameter,
    ParameterProfile,
    full_profile,
    parse_parameter,
)
from core.recognizers import chordal_chromatic_number, is_chordal


# =============================================================================
# BRUTE-FORCE ORACLES
# =============================================================================

def set_partitions(n):
    """Every partition of range(n) as a tuple of class masks (restricted growth strings)."""
    labels = [0] * n

    def grow(v, opened):
        if v == n:
            classes = [0] * opened
            for u, c in enumerate(labels):
                classes[c] |= 1 << u
            yield tuple(classes)
            return
        for c in range(opened + 1):
            labels[v] = c
            yield from grow(v + 1, max(opened, c + 1))

    yield from grow(0, 0)


def brute_force(g, accept, ordered=False):
    best = 0
    for classes in set_partitions(g.n):
        orders = itertools.permutations(classes) if ordered else [classes]
        if any(accept(ColoringPartition(tuple(order))) for order in orders):
            best = max(best, len(classes))
    return best


def oracle_psi(g):
    return brute_force(g, lambda p: p.is_complete(g))


def oracle_alpha(g):
    return brute_force(g, lambda p: p.is_proper(g) and p.is_complete(g))


def oracle_b(g):
    return brute_force(g, lambda p: p.is_proper(g) and p.is_dominating(g))


def oracle_pseudo_b(g):
    return brute_force(g, lambda p: p.is_dominating(g))


def oracle_chi(g):
    return min(len(classes) for classes in set_partitions(g.n)
               if ColoringPartition(classes).is_proper(g))


def oracle_pseudo_grundy(g):
    return brute_force(g, lambda p: p.is_pseudo_grundy(g), ordered=True)


def small_random_graphs(rng, count, low, high, p=0.5):
    return [random_graph(int(rng.integers(low, high + 1)), p, rng) for _ in range(count)]


# =============================================================================
# CLIQUES AND PROPER COLORINGS
# =============================================================================

def test_clique_number_examples(named):
    assert clique_number(named["C4"]) == 2
    assert clique_number(named["K1"]) == 1
    assert clique_number(named["D"]) == 3
    assert max_clique(named["D"]) == [0, 1, 2]


def test_clique_number_against_networkx(rng):
    for g in small_random_graphs(rng, 40, 1, 10):
        expected = max(len(c) for c in nx.find_cliques(to_networkx(g)))
        assert clique_number(g) == expected


def test_chromatic_number_examples(named):
    assert chromatic_number(named["C4"]) == 2
    assert chromatic_number(named["K5"]) == 5
    assert chromatic_number(named["C5"]) == 3


def test_chromatic_number_against_oracles(rng):
    for g in small_random_graphs(rng, 25, 1, 6):
        colors = proper_coloring(g)
        assert all(colors[u] != colors[v] for u, v in g.edges())
        assert chromatic_number(g) == oracle_chi(g)
        if is_chordal(g).member:
            assert chordal_chromatic_number(g) == chromatic_number(g)


def test_chordal_coloring_rejects_non_chordal(named):
    with pytest.raises(GraphError):
        chordal_chromatic_number(named["C4"])


# =============================================================================
# HADWIGER NUMBER
# =============================================================================

@pytest.mark.parametrize("name, expected", [
    ("C4", 3), ("P4", 2), ("P3+K2", 2), ("3K2", 2), ("K3,3", 4), ("K5", 5), ("K1", 1),
])
def test_hadwiger_examples(named, name, expected):
    assert hadwiger_number(named[name]) == expected


def test_minor_model_is_valid(named):
    model = hadwiger_minor(named["K3,3"])
    assert model.k == 4 and model.is_valid(named["K3,3"])


def test_hadwiger_formulations_agree_on_random_graphs(rng):
    for g in small_random_graphs(rng, 30, 1, 7, p=0.4):
        component, partition = connected_complete_coloring(g)
        assert partition.is_connected(g) and partition.is_complete(g)
        assert hadwiger_via_coloring(g) == hadwiger_number(g)


def test_hadwiger_formulations_agree_up_to_order_six():
    for g in enumerate_up_to(6):
        assert hadwiger_via_coloring(g) == hadwiger_number(g), emit_graph6(g)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_hadwiger_formulations_agree_on_larger_random_graphs(rng, n):
    for _ in range(200):
        g = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        assert hadwiger_via_coloring(g) == hadwiger_number(g), emit_graph6(g)


def test_hadwiger_via_coloring_example(named):
    assert hadwiger_via_coloring(named["C4"]) == 3


# =============================================================================
# COMPLETE COLORINGS
# =============================================================================

@pytest.mark.parametrize("name, expected", [("C4", 3), ("K5", 5), ("3K2", 3)])
def test_pseudoachromatic_examples(named, name, expected):
    assert pseudoachromatic_number(named[name]) == expected


@pytest.mark.parametrize("name, expected", [
    ("P4", 3), ("P3+K2", 3), ("3K2", 3), ("C4", 2), ("K3,3", 2),
])
def test_achromatic_examples(named, name, expected):
    assert achromatic_number(named[name]) == expected


def test_complete_colorings_against_brute_force(rng):
    for g in small_random_graphs(rng, 20, 1, 6):
        assert pseudoachromatic_number(g) == oracle_psi(g)
        assert achromatic_number(g) == oracle_alpha(g)


def test_pseudoachromatic_witness(named):
    partition = pseudoachromatic_coloring(named["C4"])
    assert partition.k == 3
    assert partition.is_partition_of(named["C4"]) and partition.is_complete(named["C4"])


def test_partition_search_bounds(named):
    assert find_partition(named["C4"], 3, complete=True) is not None
    assert find_partition(named["C4"], 4, complete=True) is None
    assert edge_bound(named["3K2"]) == 3
    assert m_degree(named["3P3"]) == 3
    with pytest.raises(GraphError):
        find_partition(named["C4"], 0)


# =============================================================================
# DOMINATING COLORINGS
# =============================================================================

@pytest.mark.parametrize("name, expected", [("K5", 5), ("3P3", 3), ("2D", 4), ("C4", 2)])
def test_b_chromatic_examples(named, name, expected):
    assert b_chromatic_number(named[name]) == expected


@pytest.mark.parametrize("name, expected", [("C4", 2), ("K5", 5), ("P4", 2)])
def test_pseudo_b_examples(named, name, expected):
    assert pseudo_b_chromatic_number(named[name]) == expected


def test_b_coloring_witness(named):
    g = named["2D"]
    partition = b_chromatic_coloring(g)
    assert partition.k == 4
    assert partition.is_proper(g) and partition.is_dominating(g)


def test_dominating_colorings_against_brute_force(rng):
    for g in small_random_graphs(rng, 20, 1, 6):
        assert b_chromatic_number(g) == oracle_b(g)
        assert pseudo_b_chromatic_number(g) == oracle_pseudo_b(g)


# =============================================================================
# GRUNDY COLORINGS
# =============================================================================

@pytest.mark.parametrize("name, expected", [("P4", 3), ("C4", 2), ("3P3", 2), ("2D", 3)])
def test_grundy_examples(named, name, expected):
    assert grundy_number(named[name]) == expected


@pytest.mark.parametrize("name, expected", [("C4", 3), ("K5", 5)])
def test_pseudo_grundy_examples(named, name, expected):
    assert pseudo_grundy_number(named[name]) == expected


def test_pseudo_grundy_of_edgeless_graphs():
    assert all(pseudo_grundy_number(Graph.empty(n)) == 1 for n in range(1, 6))


def test_grundy_formulations_agree_on_random_graphs(rng):
    for g in small_random_graphs(rng, 25, 1, 6):
        assert grundy_number(g) == grundy_number_by_orderings(g)
        assert grundy_coloring(g).is_grundy(g)


def test_grundy_formulations_agree_up_to_order_six():
    for g in enumerate_up_to(6):
        assert grundy_number(g) == grundy_number_by_orderings(g), emit_graph6(g)


def test_pseudo_grundy_against_brute_force(rng):
    for g in small_random_graphs(rng, 15, 1, 5):
        partition = pseudo_grundy_coloring(g)
        assert partition.is_partition_of(g) and partition.is_pseudo_grundy(g)
        assert partition.k == oracle_pseudo_grundy(g)


def test_grundy_ordering_limit():
    with pytest.raises(GraphError):
        grundy_number_by_orderings(Graph.empty(9))


# =============================================================================
# PROFILES
# =============================================================================

def test_profile_of_four_cycle(named):
    assert full_profile(named["C4"]).as_tuple() == (2, 2, 3, 3, 2, 2, 2, 2, 3)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_profile_of_complete_graphs(n):
    assert full_profile(Graph.complete(n)).as_tuple() == (n,) * 9


def test_profile_chains_hold_on_random_graphs(rng):
    for g in small_random_graphs(rng, 15, 1, 7):
        profile = full_profile(g)
        assert profile.chain_violations() == []
        assert profile.chi <= profile.hadwiger


def test_chain_violation_raises(monkeypatch, named):
    monkeypatch.setitem(PARAMETER_SOLVERS, Parameter.HADWIGER, lambda g: 1)
    with pytest.raises(ConsistencyError):
        full_profile(named["C4"])
    assert full_profile(named["C4"], check_chains=False).hadwiger == 1


def test_profile_round_trip():
    profile = ParameterProfile.from_tuple((2, 2, 3, 3, 2, 2, 2, 2, 3))
    assert profile.value(Parameter.PSEUDO_GRUNDY) == 3
    assert profile.to_dict()["hadwiger"] == 3
    with pytest.raises(ValueError):
        ParameterProfile.from_tuple((1, 2))


@pytest.mark.parametrize("text, expected", [
    ("psi", Parameter.PSI), ("b", Parameter.B_CHROMATIC), ("B", Parameter.PSEUDO_B),
    ("grundy", Parameter.GRUNDY), ("Γ", Parameter.GRUNDY), ("pseudo_grundy", Parameter.PSEUDO_GRUNDY),
    ("OMEGA", Parameter.OMEGA), ("h", Parameter.HADWIGER),
])
def test_parse_parameter(text, expected):
    assert parse_parameter(text) == expected


def test_parse_parameter_rejects_unknown():
    with pytest.raises(ValueError):
        parse_parameter("theta")


def test_vertex_subset_profile(named):
    from core.graph import induced_subgraph
    p4 = induced_subgraph(named["P5"], mask_of([0, 1, 2, 3]))
    assert full_profile(p4).psi == 3


@pytest.mark.parametrize("name", ["C4", "P4", "P3+K2", "3K2"])
def test_pseudo_b_differs_from_psi_on_omega_psi_family(named, name):
    profile = full_profile(named[name])
    assert profile.pseudo_b != profile.psi


@pytest.mark.parametrize("name", ["C4", "P4", "3P3", "2D"])
def test_b_differs_from_pseudo_grundy_on_its_family(named, name):
    profile = full_profile(named[name])
    assert profile.b_chromatic != profile.pseudo_grundy


# =============================================================================
# RELABELING AND VERTEX DELETION
# =============================================================================

# b is left out: deleting a vertex can raise it (see below)
DELETION_MONOTONE = [p for p in Parameter if p is not Parameter.B_CHROMATIC]


def test_profile_is_invariant_under_relabeling(rng):
    graphs = list(enumerate_up_to(5)) + small_random_graphs(rng, 20, 6, 7)
    for g in graphs:
        perm = [int(v) for v in rng.permutation(g.n)]
        assert full_profile(permute(g, perm)) == full_profile(g), (emit_graph6(g), perm)


def test_vertex_deletion_never_increases_parameters(cache):
    for g in enumerate_up_to(6):
        profile = cache.get_or_compute(g)
        for v in range(g.n if g.n > 1 else 0):
            smaller = cache.get_or_compute(delete_vertex(g, v))
            for parameter in DELETION_MONOTONE:
                assert smaller.value(parameter) <= profile.value(parameter), \
                    (emit_graph6(g), v, parameter.value)


def test_b_chromatic_can_grow_when_a_vertex_is_deleted():
    # C6 plus one chord: b = 2, yet deleting an end of the chord leaves P5 with b = 3
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (2, 5)])
    assert b_chromatic_number(g) == 2
    assert b_chromatic_number(delete_vertex(g, 5)) == 3
    assert full_profile(g).b_chromatic == 2
