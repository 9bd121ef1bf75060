"""Minimum vertex cover backends and graph-class recognition.

Three exact backends: branch and bound (any graph), König via
Hopcroft-Karp (bipartite), and dynamic programming over a tree
decomposition (see treewidth module). The auto dispatcher picks per
connected component. A greedy maximal matching doubles as the classic
2-approximation and as the branch-and-bound lower bound.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import AbstractSet, Sequence

from ._kernels import kernel_for
from .errors import BudgetExceededError, InvalidBipartitionError
from .graph import Graph, induced_subgraph

AUTO_WIDTH_CAP = 12


@dataclass(frozen=True)
class VcResult:
    """A vertex cover with provenance.

    backend is one of "bnb", "bipartite", "treewidth", or a +-joined
    combination when the auto dispatcher mixed backends across
    components. matching_bound is a maximal-matching lower bound on the
    optimum; nodes counts branch-and-bound search nodes when that
    backend ran.
    """

    cover: frozenset[int]
    size: int
    backend: str
    matching_bound: int | None = None
    nodes: int | None = None


def is_vertex_cover(g: Graph, s: AbstractSet[int]) -> bool:
    return all(u in s or v in s for u, v in g.edges)


def greedy_matching(g: Graph) -> tuple[tuple[int, int], ...]:
    """Maximal matching, edges taken greedily in sorted edge order."""
    matched: set[int] = set()
    picked: list[tuple[int, int]] = []
    for u, v in g.edges:
        if u not in matched and v not in matched:
            picked.append((u, v))
            matched.add(u)
            matched.add(v)
    return tuple(picked)


def matching_2approx_vc(g: Graph) -> frozenset[int]:
    """Both endpoints of a greedy maximal matching; at most twice optimal."""
    cover: set[int] = set()
    for u, v in greedy_matching(g):
        cover.add(u)
        cover.add(v)
    return frozenset(cover)


def min_vc_branch_and_bound(
    g: Graph, *, kernel: str = "auto", node_budget: int = 0
) -> VcResult:
    """Exact minimum cover by branch and bound.

    kernel selects the search implementation ("auto", "compiled",
    "pure"); all of them run the identical search. node_budget of 0
    means unlimited, otherwise exceeding it raises BudgetExceededError.
    """
    search = kernel_for(g.n, prefer=kernel)
    try:
        mask, nodes = search(g.n, g.adjacency_masks(), node_budget)
    except RuntimeError as exc:
        raise BudgetExceededError(str(exc)) from None
    cover = frozenset(v for v in range(g.n) if (mask >> v) & 1)
    return VcResult(
        cover=cover,
        size=len(cover),
        backend="bnb",
        matching_bound=len(greedy_matching(g)),
        nodes=nodes,
    )


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """Two-colour the graph by BFS, or None when an odd cycle exists.

    The smallest vertex of each component lands on the first side.
    """
    side = [-1] * g.n
    for root in range(g.n):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbours(u)):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (
        frozenset(v for v in range(g.n) if side[v] == 0),
        frozenset(v for v in range(g.n) if side[v] == 1),
    )


def _hopcroft_karp(
    g: Graph, left: Sequence[int]
) -> tuple[dict[int, int], dict[int, int]]:
    """Maximum matching; returns (left-to-right, right-to-left) maps."""
    INF = float("inf")
    match_l: dict[int, int] = {}
    match_r: dict[int, int] = {}
    adj = {u: sorted(g.neighbours(u)) for u in left}
    dist: dict[int, float] = {}

    def bfs() -> bool:
        dist.clear()
        queue: deque[int] = deque()
        for u in left:
            if u not in match_l:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                nxt = match_r.get(w)
                if nxt is None:
                    found = True
                elif nxt not in dist:
                    dist[nxt] = dist[u] + 1
                    queue.append(nxt)
        return found

    def dfs(u: int) -> bool:
        for w in adj[u]:
            nxt = match_r.get(w)
            if nxt is None or (dist.get(nxt, INF) == dist[u] + 1 and dfs(nxt)):
                match_l[u] = w
                match_r[w] = u
                return True
        dist[u] = INF
        return False

    while bfs():
        for u in left:
            if u not in match_l:
                dfs(u)
    return match_l, match_r


def min_vc_bipartite(
    g: Graph,
    sides: tuple[AbstractSet[int], AbstractSet[int]] | None = None,
) -> VcResult:
    """König cover: maximum matching, then alternating-path extraction.

    sides may be supplied (and is validated) or computed here; a graph
    with an odd cycle raises InvalidBipartitionError.
    """
    if sides is None:
        sides = bipartition(g)
        if sides is None:
            raise InvalidBipartitionError("graph contains an odd cycle")
    side_a, side_b = frozenset(sides[0]), frozenset(sides[1])
    if side_a & side_b or (side_a | side_b) != frozenset(range(g.n)):
        raise InvalidBipartitionError("sides do not partition the vertex set")
    for u, v in g.edges:
        if (u in side_a) == (v in side_a):
            raise InvalidBipartitionError(f"edge ({u}, {v}) lies inside one side")

    left = sorted(side_a)
    match_l, match_r = _hopcroft_karp(g, left)

    # König: Z = free left vertices plus everything reachable by
    # alternating paths (unmatched edges rightward, matched leftward).
    z_left = {u for u in left if u not in match_l}
    z_right: set[int] = set()
    queue = deque(sorted(z_left))
    while queue:
        u = queue.popleft()
        for w in sorted(g.neighbours(u)):
            if w in z_right or match_l.get(u) == w:
                continue
            z_right.add(w)
            back = match_r.get(w)
            if back is not None and back not in z_left:
                z_left.add(back)
                queue.append(back)
    cover = frozenset(side_a - z_left) | frozenset(z_right)

    assert len(cover) == len(match_l), "König equality violated"
    assert is_vertex_cover(g, cover), "extracted set misses an edge"
    return VcResult(
        cover=cover,
        size=len(cover),
        backend="bipartite",
        matching_bound=len(match_l),
    )


def lex_bfs_order(g: Graph) -> list[int]:
    """Lexicographic BFS visit order; ties broken by smallest index."""
    labels: list[list[int]] = [[] for _ in range(g.n)]
    order: list[int] = []
    visited = [False] * g.n
    for step in range(g.n):
        pick = -1
        for v in range(g.n):
            if not visited[v] and (pick < 0 or labels[v] > labels[pick]):
                pick = v
        visited[pick] = True
        order.append(pick)
        for w in g.neighbours(pick):
            if not visited[w]:
                labels[w].append(g.n - step)
    return order


def perfect_elimination_ordering(g: Graph) -> tuple[int, ...] | None:
    """A PEO when the graph is chordal, None otherwise.

    Lex-BFS visit order reversed is a PEO exactly for chordal graphs;
    the candidate is verified directly.
    """
    peo = list(reversed(lex_bfs_order(g)))
    position = {v: i for i, v in enumerate(peo)}
    for i, v in enumerate(peo):
        later = [w for w in g.neighbours(v) if position[w] > i]
        if not later:
            continue
        first = min(later, key=position.get)
        rest = set(later) - {first}
        if not rest <= g.neighbours(first):
            return None
    return tuple(peo)


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def min_vc_treewidth(g: Graph, *, width_budget: int = 20) -> VcResult:
    from .treewidth import min_fill_decomposition, vc_via_tree_decomposition

    td = min_fill_decomposition(g)
    return vc_via_tree_decomposition(g, td, width_budget=width_budget)


def min_vc_auto(
    g: Graph, *, node_budget: int = 0, width_cap: int = AUTO_WIDTH_CAP
) -> VcResult:
    """Per-component dispatch: König when bipartite, treewidth DP when a
    heuristic decomposition is narrow, branch and bound otherwise."""
    from .treewidth import min_fill_decomposition, vc_via_tree_decomposition

    cover: set[int] = set()
    backends: list[str] = []
    nodes_total = 0
    saw_nodes = False
    for comp in g.components():
        sub, kept = induced_subgraph(g, comp)
        if sub.m == 0:
            continue
        sides = bipartition(sub)
        if sides is not None:
            part = min_vc_bipartite(sub, sides)
        else:
            td = min_fill_decomposition(sub)
            if td.width <= width_cap:
                part = vc_via_tree_decomposition(sub, td)
            else:
                part = min_vc_branch_and_bound(sub, node_budget=node_budget)
                saw_nodes = True
                nodes_total += part.nodes or 0
        backends.append(part.backend)
        cover.update(kept[v] for v in part.cover)
    backend = "+".join(sorted(set(backends))) if backends else "bipartite"
    return VcResult(
        cover=frozenset(cover),
        size=len(cover),
        backend=backend,
        matching_bound=len(greedy_matching(g)),
        nodes=nodes_total if saw_nodes else None,
    )


def min_vertex_cover(
    g: Graph, backend: str = "auto", *, node_budget: int = 0
) -> VcResult:
    """Front door used by the solvers and the CLI --backend flag."""
    if backend == "auto":
        return min_vc_auto(g, node_budget=node_budget)
    if backend == "bnb":
        return min_vc_branch_and_bound(g, node_budget=node_budget)
    if backend == "bipartite":
        return min_vc_bipartite(g)
    if backend == "treewidth":
        return min_vc_treewidth(g)
    raise ValueError(f"unknown vertex cover backend: {backend!r}")
