import pytest

from posetsi import (
    ResourceLimit,
    antichain,
    build_graph,
    chain,
    enumerate_posets,
    hamiltonian_path,
    is_connected,
    ruskey_report,
    signed_count,
    zigzag,
)
from posetsi.ruskey import part_sizes


def test_two_points():
    g = build_graph(antichain(2))
    assert len(g.vertices) == 2
    assert g.edges == ((0, 1),)


def test_chain_graph():
    for n in range(1, 6):
        g = build_graph(chain(n))
        assert len(g.vertices) == 1
        assert g.edges == ()


def test_fence_six_parts():
    g = build_graph(zigzag(6))
    assert len(g.vertices) == 61
    plus, minus = part_sizes(g)
    assert abs(plus - minus) == 1 == signed_count(zigzag(6)).imbalance


def test_edges_flip_sign_both_modes():
    for adjacent in (False, True):
        for n in range(5):
            for p in enumerate_posets(n):
                g = build_graph(p, adjacent_only=adjacent)
                for a, b in g.edges:
                    assert g.signs[a] != g.signs[b]


def test_adjacent_edges_subset_of_any():
    p = zigzag(4)
    any_mode = set(build_graph(p).edges)
    adjacent = set(build_graph(p, adjacent_only=True).edges)
    assert adjacent <= any_mode


def test_part_gap_equals_imbalance():
    for n in range(6):
        for p in enumerate_posets(n):
            g = build_graph(p)
            plus, minus = part_sizes(g)
            assert abs(plus - minus) == signed_count(p).imbalance


def test_adjacent_mode_connected_small():
    for n in range(6):
        for p in enumerate_posets(n):
            assert is_connected(build_graph(p, adjacent_only=True))


def test_antichain_three_adjacent_graph_connected():
    g = build_graph(antichain(3), adjacent_only=True)
    assert len(g.vertices) == 6
    assert is_connected(g)


def test_hamiltonian_path_trivial_and_blocked(eight_cycle):
    assert hamiltonian_path(build_graph(chain(4))) == [0]
    # imbalance two forces a bipartite gap of two: no path exists
    g = build_graph(eight_cycle)
    assert hamiltonian_path(g) is None


def test_found_paths_are_valid():
    for p in (antichain(3), zigzag(4), zigzag(5)):
        g = build_graph(p)
        path = hamiltonian_path(g)
        assert path is not None
        assert sorted(path) == list(range(len(g.vertices)))
        adjacency = {frozenset(e) for e in g.edges}
        for a, b in zip(path, path[1:]):
            assert frozenset((a, b)) in adjacency


def test_graph_cap():
    with pytest.raises(ResourceLimit):
        build_graph(antichain(6), cap=100)
    with pytest.raises(ResourceLimit):
        hamiltonian_path(build_graph(antichain(5)), cap=10)


def test_report_examples(eight_cycle):
    rep = ruskey_report(antichain(2))
    assert rep["si"] == 0 and rep["path_found"] and rep["consistent_with_conjecture"]
    rep = ruskey_report(eight_cycle)
    assert rep["si"] == 2 and not rep["path_found"]
    assert rep["consistent_with_conjecture"]
    assert rep["bipartite_by_sign"]


def test_report_modes_stated():
    assert ruskey_report(chain(2))["mode"] == "any-transposition"
    assert ruskey_report(chain(2), adjacent_only=True)["mode"] == "adjacent"


def test_conjecture_sweep_tiny():
    for n in range(5):
        for p in enumerate_posets(n):
            rep = ruskey_report(p)
            assert rep["consistent_with_conjecture"]
            if rep["path_found"]:
                assert rep["si"] <= 1
