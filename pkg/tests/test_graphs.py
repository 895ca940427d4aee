import itertools
import math
import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copymax.graphs import (
    Graph,
    are_isomorphic,
    automorphism_count,
    builtin_graph,
    canonical_form,
    clique_with_pendant_star,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_connected_graphs,
    graph_from_edge_mask,
    graph_invariants,
    independence_number,
    independent_set_census,
    is_connected,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    write_graph6,
)
from oracles import ref_automorphism_count, ref_independent_counts


def random_graph(rng, n, p=0.5):
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# parsing

def test_parse_edge_list_g6(g6):
    assert g6.n == 6
    assert g6.edge_count == 6
    assert set(g6.edges) == {(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)}


def test_parse_edge_list_single_edge():
    g = parse_edge_list("1-2")
    assert g.n == 2 and g.edges == ((0, 1),)


@pytest.mark.parametrize("text", ["1-1", "1--2", "a-b", "0-1", "1-2,,3-4", "n=2;1-3"])
def test_parse_edge_list_rejects(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


def test_parse_edge_list_declared_vertices_flags_isolated():
    g = parse_edge_list("n=4;1-2")
    assert g.n == 4
    assert g.has_isolated_vertices


def test_parse_edge_list_roundtrip(g6):
    assert parse_edge_list(g6.edge_list_text()) == g6


def test_graph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


# ---------------------------------------------------------------------------
# graph6

def test_graph6_known_strings():
    assert parse_graph6("A_") == complete_graph(2)
    assert parse_graph6("A?") == empty_graph(2)
    assert parse_graph6("C~") == complete_graph(4)


def test_graph6_roundtrip_enumerated():
    for n in range(2, 6):
        for mask in range(1 << (n * (n - 1) // 2)):
            g = graph_from_edge_mask(n, mask)
            assert parse_graph6(write_graph6(g)) == g
            if n > 4:
                break  # full scan only for tiny n


def test_graph6_matches_networkx():
    rng = random.Random(20240917)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 16))
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        theirs = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert write_graph6(g) == theirs
        back = nx.from_graph6_bytes(write_graph6(g).encode())
        assert set(map(tuple, map(sorted, back.edges()))) == set(g.edges)


@pytest.mark.parametrize("text", ["", "A", "A_?", "\x7f_", "~~~"])
def test_graph6_rejects(text):
    with pytest.raises(ValueError):
        parse_graph6(text)


@given(st.integers(min_value=1, max_value=10), st.integers(min_value=0))
@settings(max_examples=120, deadline=None)
def test_graph6_roundtrip_random(n, seed):
    mask = seed % (1 << (n * (n - 1) // 2))
    g = graph_from_edge_mask(n, mask)
    assert parse_graph6(write_graph6(g)) == g


# ---------------------------------------------------------------------------
# independence

def test_independence_numbers(g6):
    assert independence_number(g6) == 3
    assert independence_number(complete_graph(5)) == 1
    assert independence_number(path_graph(4)) == 3


def test_census_g6(g6):
    census = independent_set_census(g6)
    assert census.counts == (1, 6, 9, 3, 0, 0, 0)
    assert census.alpha == 3 and census.max_sets == 3


def test_census_examples():
    two_edges = disjoint_union(complete_graph(2), complete_graph(2))
    census = independent_set_census(two_edges)
    assert census.alpha == 2 and census.max_sets == 4
    census = independent_set_census(cycle_graph(5))
    assert census.alpha == 2 and census.max_sets == 5


def test_census_against_combinations_oracle():
    rng = random.Random(4119)
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 8))
        assert independent_set_census(g).counts == ref_independent_counts(g)


def test_trivial_alpha_identities():
    for v in range(2, 7):
        assert independence_number(empty_graph(v)) == v
        assert independence_number(complete_graph(v)) == 1


def test_max_independent_sets_bound_at_half_alpha():
    # graphs whose independence number is exactly half the vertex count
    # cannot have more than 2^(v/2) maximum independent sets
    for g in enumerate_connected_graphs(5):
        census = independent_set_census(g)
        if 2 * census.alpha == g.n:
            assert census.max_sets <= 2 ** (g.n // 2)


# ---------------------------------------------------------------------------
# automorphisms

def test_automorphism_counts(g6):
    assert automorphism_count(complete_graph(3)) == 6
    assert automorphism_count(g6) == 4
    assert automorphism_count(path_graph(2)) == 2


def test_automorphism_against_oracle():
    rng = random.Random(99)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 6))
        assert automorphism_count(g) == ref_automorphism_count(g)


def test_automorphism_divides_factorial():
    for g in enumerate_connected_graphs(5):
        assert math.factorial(g.n) % automorphism_count(g) == 0


def test_graph_invariants_bundle(g6):
    inv = graph_invariants(g6)
    assert (inv.alpha, inv.max_independent_set_count, inv.automorphism_count) == (3, 3, 4)
    assert inv.independent_counts[0] == 1
    assert inv.independent_counts[1] == g6.n


# ---------------------------------------------------------------------------
# the counterexample family

def test_family_smallest_member_is_g6(g6):
    assert are_isomorphic(clique_with_pendant_star(3, 2), g6)


def test_family_counts():
    g = clique_with_pendant_star(4, 2)
    assert g.n == 7 and g.edge_count == 9  # C(4,2) + 1 + 2


def test_family_rejects_small_parameters():
    with pytest.raises(ValueError):
        clique_with_pendant_star(2, 2)
    with pytest.raises(ValueError):
        clique_with_pendant_star(3, 1)


# ---------------------------------------------------------------------------
# enumeration

def test_enumerate_tiny_census():
    got = list(enumerate_connected_graphs(3))
    keys = {canonical_form(g) for g in got}
    expected = {canonical_form(complete_graph(2)),
                canonical_form(path_graph(2)),
                canonical_form(complete_graph(3))}
    assert keys == expected


def test_enumerate_counts():
    assert sum(1 for _ in enumerate_connected_graphs(4)) == 9
    assert sum(1 for _ in enumerate_connected_graphs(5)) == 30


def test_enumerate_pairwise_nonisomorphic():
    graphs = list(enumerate_connected_graphs(5))
    keys = [canonical_form(g) for g in graphs]
    assert len(set(keys)) == len(keys)


def test_enumerate_matches_direct_scan():
    # brute force: canonicalise every labelled graph on 4 vertices
    seen = set()
    for mask in range(1 << 6):
        g = graph_from_edge_mask(4, mask)
        if is_connected(g):
            seen.add(canonical_form(g))
    ours = {canonical_form(g) for g in enumerate_connected_graphs(4) if g.n == 4}
    assert ours == seen


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(8))


# ---------------------------------------------------------------------------
# builtins

def test_builtin_names(g6):
    assert builtin_graph("G6") == g6
    assert builtin_graph("P4") == path_graph(4)
    assert builtin_graph("K5") == complete_graph(5)
    assert builtin_graph("C5") == cycle_graph(5)
    assert builtin_graph("star3") == star_graph(3)
    with pytest.raises(ValueError):
        builtin_graph("Q3")
