"""Ground-truth solvers for small instances.

Everything here is exact and exponential. These routines exist to
validate the polynomial machinery, so they deliberately avoid sharing
code with it: spanning trees are enumerated directly, covers and
dominating sets are found by subset search ordered by size then
lexicographically, which makes the returned optimum canonical.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import AbstractSet, Iterator

from .blocks import blocks_and_cut_vertices
from .domination import Colour, Colouring, domination_requirements
from .errors import BudgetExceededError, DisconnectedGraphError
from .graph import Graph

EDGE_ENUMERATION_BUDGET = 16
VC_VERTEX_BUDGET = 20
SDS_VERTEX_BUDGET = 16


@dataclass(frozen=True)
class SpanningTree:
    edges: frozenset[tuple[int, int]]


class _DSU:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True

    def copy(self) -> "_DSU":
        d = _DSU(0)
        d.parent = self.parent.copy()
        return d


def enumerate_spanning_trees(
    g: Graph, edge_budget: int = EDGE_ENUMERATION_BUDGET
) -> Iterator[SpanningTree]:
    """Yield every spanning tree exactly once.

    Backtracking over edge inclusion/exclusion; a branch is pruned when
    the edges still available cannot connect all vertices.
    """
    if not g.is_connected():
        raise DisconnectedGraphError("spanning trees require a connected graph")
    if g.m > edge_budget:
        raise BudgetExceededError(
            f"{g.m} edges exceeds the enumeration budget of {edge_budget}"
        )
    n, edges = g.n, g.edges
    if n == 1:
        yield SpanningTree(frozenset())
        return

    def spannable(dsu: _DSU, start: int) -> bool:
        d = dsu.copy()
        parts = sum(1 for v in range(n) if d.find(v) == v)
        for u, v in edges[start:]:
            if d.union(u, v):
                parts -= 1
        return parts == 1

    def walk(i: int, dsu: _DSU, chosen: list[tuple[int, int]]) -> Iterator[SpanningTree]:
        if len(chosen) == n - 1:
            yield SpanningTree(frozenset(chosen))
            return
        if i == len(edges) or len(chosen) + (len(edges) - i) < n - 1:
            return
        u, v = edges[i]
        if dsu.find(u) != dsu.find(v):
            inc = dsu.copy()
            inc.union(u, v)
            chosen.append((u, v))
            yield from walk(i + 1, inc, chosen)
            chosen.pop()
        if spannable(dsu, i + 1):
            yield from walk(i + 1, dsu, chosen)

    yield from walk(0, _DSU(n), [])


def spanning_tree_count(g: Graph) -> int:
    """Number of spanning trees by the matrix-tree theorem, exactly.

    Integer-preserving (Bareiss) elimination on the Laplacian minor, so
    the count is exact for any size.
    """
    if g.n == 0:
        return 0
    if g.n == 1:
        return 1
    n = g.n
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]
    size = n - 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, size) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[size - 1][size - 1]


def is_sd_set_by_enumeration(
    g: Graph, s: AbstractSet[int], edge_budget: int = EDGE_ENUMERATION_BUDGET
) -> bool:
    """Literal check: s dominates every spanning tree."""
    for tree in enumerate_spanning_trees(g, edge_budget):
        nbr: list[set[int]] = [set() for _ in range(g.n)]
        for u, v in tree.edges:
            nbr[u].add(v)
            nbr[v].add(u)
        for v in range(g.n):
            if v not in s and not (nbr[v] & s):
                return False
    return True


def _subsets_by_size(universe: list[int]) -> Iterator[tuple[int, ...]]:
    for k in range(len(universe) + 1):
        yield from itertools.combinations(universe, k)


def min_vc_bruteforce(g: Graph, vertex_budget: int = VC_VERTEX_BUDGET) -> frozenset[int]:
    """Lexicographically-smallest minimum vertex cover by subset search."""
    if g.n > vertex_budget:
        raise BudgetExceededError(
            f"{g.n} vertices exceeds the vertex-cover oracle budget of {vertex_budget}"
        )
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    for combo in _subsets_by_size(list(range(g.n))):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if all(mask & em for em in edge_masks):
            return frozenset(combo)
    raise AssertionError("the full vertex set always covers")


def min_sds_bruteforce(
    g: Graph, vertex_budget: int = SDS_VERTEX_BUDGET
) -> frozenset[int]:
    """Lexicographically-smallest minimum simultaneous dominating set.

    Feasibility of a subset is judged by the per-vertex block conditions;
    when the graph is small enough the winner is re-checked against
    direct spanning-tree enumeration.
    """
    if g.n > vertex_budget:
        raise BudgetExceededError(
            f"{g.n} vertices exceeds the SD-set oracle budget of {vertex_budget}"
        )
    if not g.is_connected():
        raise DisconnectedGraphError("SD-sets are defined on connected graphs")
    bct = blocks_and_cut_vertices(g)
    reqs = domination_requirements(g, bct)
    req_masks = [
        [sum(1 << u for u in alt) for alt in alts] for alts in reqs
    ]
    for combo in _subsets_by_size(list(range(g.n))):
        mask = 0
        for v in combo:
            mask |= 1 << v
        ok = True
        for v in range(g.n):
            if (mask >> v) & 1:
                continue
            if not any(rm & ~mask == 0 for rm in req_masks[v]):
                ok = False
                break
        if ok:
            result = frozenset(combo)
            if g.n >= 2 and g.m <= EDGE_ENUMERATION_BUDGET:
                assert is_sd_set_by_enumeration(g, result)
            return result
    raise AssertionError("the full vertex set is always simultaneously dominating")


def min_crsds_bruteforce(
    g: Graph, colouring: Colouring, vertex_budget: int = SDS_VERTEX_BUDGET
) -> frozenset[int]:
    """Smallest colour-respecting SD-set by subset search over free vertices."""
    if g.n > vertex_budget:
        raise BudgetExceededError(
            f"{g.n} vertices exceeds the SD-set oracle budget of {vertex_budget}"
        )
    if not g.is_connected():
        raise DisconnectedGraphError("SD-sets are defined on connected graphs")
    bct = blocks_and_cut_vertices(g)
    reqs = domination_requirements(g, bct)
    req_masks = [[sum(1 << u for u in alt) for alt in alts] for alts in reqs]
    ones_mask = 0
    for v in range(g.n):
        if colouring[v] is Colour.ONE:
            ones_mask |= 1 << v
    free = [v for v in range(g.n) if colouring[v] is not Colour.ONE]
    needs = [v for v in range(g.n) if colouring[v] is Colour.ZERO_HAT]
    for combo in _subsets_by_size(free):
        mask = ones_mask
        for v in combo:
            mask |= 1 << v
        ok = True
        for v in needs:
            if (mask >> v) & 1:
                continue
            if not any(rm & ~mask == 0 for rm in req_masks[v]):
                ok = False
                break
        if ok:
            return frozenset(v for v in range(g.n) if (mask >> v) & 1)
    raise AssertionError("the full vertex set always respects any colouring")
