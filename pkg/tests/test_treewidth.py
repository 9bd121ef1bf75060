import random

import pytest

from conftest import clique, cycle, path, star
from simdom import (
    Graph,
    InvalidDecompositionError,
    TreeDecomposition,
    WidthBudgetError,
    is_vertex_cover,
    min_fill_decomposition,
    min_vc_branch_and_bound,
    min_vc_bruteforce,
    nice_decomposition,
    validate_decomposition,
    vc_via_tree_decomposition,
    write_td,
)
from simdom.generators import random_connected_graph, random_graph
from simdom.treewidth import decomposition_violation


def test_min_fill_width_on_known_families():
    assert min_fill_decomposition(path(6)).width == 1
    assert min_fill_decomposition(star(5)).width == 1
    td = min_fill_decomposition(cycle(3))
    assert td.width == 2
    assert min_fill_decomposition(cycle(4)).width == 2
    assert min_fill_decomposition(clique(5)).width == 4
    assert min_fill_decomposition(Graph(1, [])).width == 0


def test_min_fill_output_validates():
    rng = random.Random(2)
    checked = 0
    for _ in range(1000):
        n = rng.randint(1, 30)
        m = rng.randint(0, min(3 * n, n * (n - 1) // 2))
        g = random_graph(n, m, seed=rng.randint(0, 10**6))
        td = min_fill_decomposition(g)
        assert validate_decomposition(g, td), decomposition_violation(g, td)
        checked += 1
    assert checked == 1000


def test_trivial_single_bag_decomposition_validates():
    g = cycle(5)
    td = TreeDecomposition((frozenset(range(5)),), ())
    assert validate_decomposition(g, td)
    assert td.width == 4


def test_violation_messages_name_property_and_witness():
    g = path(3)
    uncovered_vertex = TreeDecomposition((frozenset({0, 1}),), ())
    msg = decomposition_violation(g, uncovered_vertex)
    assert "property (i)" in msg and "2" in msg

    uncovered_edge = TreeDecomposition(
        (frozenset({0, 1}), frozenset({2})), ((0, 1),)
    )
    msg = decomposition_violation(g, uncovered_edge)
    assert "property (ii)" in msg and "(1, 2)" in msg

    split_occurrences = TreeDecomposition(
        (frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 0})),
        ((0, 1), (1, 2)),
    )
    msg = decomposition_violation(g, split_occurrences)
    assert "property (iii)" in msg and "0" in msg


def test_violation_on_malformed_tree():
    g = path(2)
    td = TreeDecomposition((frozenset({0, 1}), frozenset({0, 1})), ())
    assert decomposition_violation(g, td) is not None
    td = TreeDecomposition(
        (frozenset({0, 1}), frozenset({0, 1})), ((0, 1), (1, 0))
    )
    assert decomposition_violation(g, td) is not None
    td = TreeDecomposition((frozenset({0, 1}),), ((0, 5),))
    assert decomposition_violation(g, td) is not None


def test_nice_form_preserves_validity_and_width():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 14)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_graph(n, m, seed=rng.randint(0, 10**6))
        td = min_fill_decomposition(g)
        nice = nice_decomposition(td)
        width = max(len(node.bag) for node in nice) - 1
        assert width == td.width
        # children precede parents, the root closes the list with an empty bag
        assert nice[-1].bag == ()
        for i, node in enumerate(nice):
            for child in (node.left, node.right):
                if child is not None:
                    assert child < i
        # re-validating the nice tree as a plain decomposition
        bags = tuple(frozenset(node.bag) for node in nice)
        edges = []
        for i, node in enumerate(nice):
            for child in (node.left, node.right):
                if child is not None:
                    edges.append((child, i))
        back = TreeDecomposition(bags, tuple(edges))
        assert validate_decomposition(g, back), decomposition_violation(g, back)


def test_nice_node_kinds_change_one_vertex_at_a_time():
    g = random_connected_graph(9, 12, seed=6)
    nice = nice_decomposition(min_fill_decomposition(g))
    for node in nice:
        if node.kind == "leaf":
            assert node.bag == ()
        elif node.kind == "introduce":
            assert node.vertex in node.bag
            assert set(nice[node.left].bag) | {node.vertex} == set(node.bag)
        elif node.kind == "forget":
            assert node.vertex not in node.bag
            assert set(nice[node.left].bag) - {node.vertex} == set(node.bag)
        else:
            assert node.kind == "join"
            assert nice[node.left].bag == nice[node.right].bag == node.bag


def test_dp_cover_examples():
    res = vc_via_tree_decomposition(path(5))
    assert res.size == 2
    assert is_vertex_cover(path(5), res.cover)

    tri = cycle(3)
    trivial = TreeDecomposition((frozenset({0, 1, 2}),), ())
    res = vc_via_tree_decomposition(tri, trivial)
    assert res.size == 2

    isolated = Graph(4, [])
    singleton_path = TreeDecomposition(
        tuple(frozenset({v}) for v in range(4)), ((0, 1), (1, 2), (2, 3))
    )
    res = vc_via_tree_decomposition(isolated, singleton_path)
    assert res.size == 0


def test_dp_matches_branch_and_bound_on_varied_density():
    rng = random.Random(10)
    for _ in range(300):
        n = rng.randint(1, 12)
        m = rng.randint(0, n * (n - 1) // 2)
        g = random_graph(n, m, seed=rng.randint(0, 10**6))
        a = vc_via_tree_decomposition(g)
        b = min_vc_branch_and_bound(g)
        assert a.size == b.size
        assert is_vertex_cover(g, a.cover)
        assert len(a.cover) == a.size


def test_dp_rejects_invalid_or_wide_input():
    g = cycle(4)
    broken = TreeDecomposition((frozenset({0, 1}),), ())
    with pytest.raises(InvalidDecompositionError):
        vc_via_tree_decomposition(g, broken)
    k = clique(6)
    with pytest.raises(WidthBudgetError):
        vc_via_tree_decomposition(k, width_budget=3)


def test_write_td_format():
    g = path(3)
    td = min_fill_decomposition(g)
    text = write_td(g, td)
    lines = text.strip().splitlines()
    assert lines[0] == f"s td {len(td.bags)} {td.width + 1} 3"
    b_lines = [l for l in lines if l.startswith("b ")]
    assert len(b_lines) == len(td.bags)
    for line in b_lines:
        parts = line.split()
        idx = int(parts[1])
        bag = {int(x) - 1 for x in parts[2:]}
        assert bag == set(td.bags[idx - 1])
    edge_lines = lines[1 + len(b_lines):]
    assert len(edge_lines) == len(td.tree_edges)
    for line in edge_lines:
        i, j = (int(x) - 1 for x in line.split())
        assert (i, j) in td.tree_edges
