import random

import pytest

from conftest import clique, cycle, path, petersen, star
from simdom import (
    BudgetExceededError,
    Graph,
    InvalidBipartitionError,
    bipartition,
    is_chordal,
    is_vertex_cover,
    matching_2approx_vc,
    min_vc_bipartite,
    min_vc_branch_and_bound,
    min_vc_bruteforce,
    min_vertex_cover,
    perfect_elimination_ordering,
)
from simdom.generators import (
    random_bipartite_graph,
    random_chordal_graph,
    random_connected_graph,
    random_graph,
)
from simdom.vertexcover import greedy_matching, lex_bfs_order, min_vc_treewidth


def test_is_vertex_cover():
    g = path(4)
    assert is_vertex_cover(g, {1, 2})
    assert not is_vertex_cover(g, {0, 3})
    assert is_vertex_cover(Graph(3, []), set())


def test_greedy_matching_takes_edges_in_index_order():
    g = path(4)  # edges (0,1), (1,2), (2,3)
    m = greedy_matching(g)
    assert m == ((0, 1), (2, 3))


def test_greedy_matching_is_maximal_and_disjoint():
    for seed in range(10):
        g = random_graph(9, 14, seed=seed)
        m = greedy_matching(g)
        used = [v for e in m for v in e]
        assert len(used) == len(set(used))
        taken = set(used)
        for u, v in g.edges:
            assert u in taken or v in taken


def test_matching_cover_is_a_cover_within_factor_two():
    for seed in range(10):
        g = random_graph(10, 16, seed=seed)
        c = matching_2approx_vc(g)
        assert is_vertex_cover(g, c)
        assert len(c) <= 2 * len(min_vc_bruteforce(g))


def test_bnb_matches_bruteforce():
    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(1, 12)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_graph(n, m, seed=rng.randint(0, 10**6))
        res = min_vc_branch_and_bound(g)
        assert is_vertex_cover(g, res.cover)
        assert res.size == len(min_vc_bruteforce(g))
        assert res.backend == "bnb"
        assert res.nodes is not None and res.nodes >= 1
        assert res.matching_bound is not None
        assert res.matching_bound <= res.size <= 2 * res.matching_bound


def test_bnb_petersen():
    res = min_vc_branch_and_bound(petersen())
    assert res.size == len(min_vc_bruteforce(petersen())) == 6


def test_bnb_kernel_choice_is_answer_invariant():
    g = random_graph(11, 20, seed=4)
    a = min_vc_branch_and_bound(g, kernel="pure")
    b = min_vc_branch_and_bound(g, kernel="auto")
    assert a.cover == b.cover
    assert a.nodes == b.nodes


def test_bnb_node_budget():
    g = clique(12)
    with pytest.raises(BudgetExceededError):
        min_vc_branch_and_bound(g, node_budget=2)


def test_bipartition_on_even_structures():
    sides = bipartition(cycle(6))
    assert sides is not None
    a, b = sides
    assert a | b == frozenset(range(6))
    assert not a & b
    assert bipartition(cycle(5)) is None
    assert bipartition(path(2)) == (frozenset({0}), frozenset({1}))


def test_bipartition_spans_disconnected_graphs():
    g = Graph(5, [(0, 1), (2, 3)])
    sides = bipartition(g)
    assert sides is not None
    a, b = sides
    for u, v in g.edges:
        assert (u in a) != (v in a)
    assert a | b == frozenset(range(5))


def test_min_vc_bipartite_matches_bruteforce():
    rng = random.Random(3)
    for _ in range(25):
        g = random_bipartite_graph(rng.randint(1, 6), rng.randint(1, 6), 0.5, seed=rng.randint(0, 10**6))
        res = min_vc_bipartite(g)
        assert is_vertex_cover(g, res.cover)
        assert res.size == len(min_vc_bruteforce(g))
        assert res.matching_bound == res.size


def test_min_vc_bipartite_rejects_odd_cycles_and_bad_sides():
    with pytest.raises(InvalidBipartitionError):
        min_vc_bipartite(cycle(5))
    g = path(3)
    with pytest.raises(InvalidBipartitionError):
        min_vc_bipartite(g, sides=({0, 1}, {1, 2}))
    with pytest.raises(InvalidBipartitionError):
        min_vc_bipartite(g, sides=({0}, {2}))
    with pytest.raises(InvalidBipartitionError):
        min_vc_bipartite(g, sides=({0, 1}, {2}))


def test_lex_bfs_is_a_permutation():
    g = random_connected_graph(9, 14, seed=11)
    order = lex_bfs_order(g)
    assert sorted(order) == list(range(9))


def _peo_holds(g, order):
    pos = {v: i for i, v in enumerate(order)}
    for i, v in enumerate(order):
        later = [u for u in g.neighbours(v) if pos[u] > i]
        if not later:
            continue
        first = min(later, key=pos.get)
        for u in later:
            if u != first and u not in g.neighbours(first):
                return False
    return True


def test_peo_on_chordal_graphs():
    for seed in range(10):
        g = random_chordal_graph(9, 0.3, seed=seed)
        order = perfect_elimination_ordering(g)
        assert order is not None
        assert _peo_holds(g, order)
        assert is_chordal(g)


def test_no_peo_on_long_cycles():
    for n in (4, 5, 6, 7):
        assert perfect_elimination_ordering(cycle(n)) is None
        assert not is_chordal(cycle(n))
    assert is_chordal(cycle(3))
    assert is_chordal(path(5))
    assert is_chordal(clique(4))


def test_treewidth_backend_matches_bruteforce():
    rng = random.Random(8)
    for _ in range(20):
        n = rng.randint(1, 10)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_graph(n, m, seed=rng.randint(0, 10**6))
        res = min_vc_treewidth(g)
        assert is_vertex_cover(g, res.cover)
        assert res.size == len(min_vc_bruteforce(g))
        assert res.backend == "treewidth"


def test_auto_dispatch_mixes_backends():
    # C4 (bipartite) next to two C5s sharing nothing: per-component routing
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    edges += [(4 + i, 4 + (i + 1) % 5) for i in range(5)]
    g = Graph(9, edges)
    res = min_vertex_cover(g)
    assert res.size == len(min_vc_bruteforce(g))
    assert "bipartite" in res.backend
    assert is_vertex_cover(g, res.cover)


def test_auto_on_isolated_vertices():
    res = min_vertex_cover(Graph(4, []))
    assert res.size == 0
    assert res.cover == frozenset()


def test_explicit_backends_agree():
    g = random_connected_graph(9, 13, seed=17)
    expected = len(min_vc_bruteforce(g))
    for backend in ("auto", "bnb", "treewidth"):
        assert min_vertex_cover(g, backend=backend).size == expected
    with pytest.raises(ValueError):
        min_vertex_cover(g, backend="magic")


def test_star_cover_is_centre():
    res = min_vc_branch_and_bound(star(6))
    assert res.cover == frozenset({0})
