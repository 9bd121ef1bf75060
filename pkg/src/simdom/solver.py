"""Exact solvers for simultaneous domination.

On a single block the problem is a vertex cover computation on a
residual graph: delete the vertices that must be in the set, drop edges
between vertices that are exempt from domination, cover what remains.
General graphs peel leaf blocks off the block-cut tree, trying the
three possible recolourings of each connection vertex and committing
the cheapest, then finish on the root block.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .blocks import BlockCutTree, blocks_and_cut_vertices, leaf_component_order
from .domination import Colour, Colouring, all_zero_hat, is_colour_respecting, is_sd_set
from .errors import DisconnectedGraphError, Not2ConnectedError
from .graph import Graph, delete_edges_within, delete_vertices, induced_subgraph
from .vertexcover import min_vertex_cover


@dataclass(frozen=True)
class BlockSolve:
    """Log entry for one peeled leaf block."""

    block: int
    connection_vertex: int
    size_one: int
    size_zero: int
    size_zero_hat: int
    case: str  # "all-equal" | "one-larger" | "zero-smaller"
    recoloured_to: Colour | None


@dataclass(frozen=True)
class SolveReport:
    solution: frozenset[int]
    size: int
    block_log: tuple[BlockSolve, ...]
    backends: tuple[str, ...]
    verified: bool


def best_colour(colours: Iterable[Colour]) -> Colour:
    """Maximum under ONE > ZERO > ZERO_HAT."""
    cs = list(colours)
    if not cs:
        raise ValueError("best_colour of an empty collection")
    return max(cs)


def _residual_core(
    h: Graph, fc: Colouring, backend: str, node_budget: int
) -> tuple[frozenset[int], str]:
    """Minimum fc-respecting set of a block graph via vertex cover."""
    ones = {v for v in range(h.n) if fc[v] is Colour.ONE}
    zeros = {v for v in range(h.n) if fc[v] is Colour.ZERO}
    h1, old_to_new = delete_vertices(h, ones)
    h2 = delete_edges_within(h1, {old_to_new[v] for v in zeros})
    vc = min_vertex_cover(h2, backend, node_budget=node_budget)
    new_to_old = {nv: ov for ov, nv in old_to_new.items()}
    s = frozenset(new_to_old[w] for w in vc.cover) | frozenset(ones)
    return s, vc.backend


def crsds_2connected(
    g: Graph, f: Colouring, *, backend: str = "auto", node_budget: int = 0
) -> tuple[frozenset[int], int]:
    """Minimum colour-respecting SD-set of a graph that is one block."""
    bct = blocks_and_cut_vertices(g)
    if len(bct.blocks) != 1:
        raise Not2ConnectedError(
            f"graph has {len(bct.blocks)} blocks; expected a single block"
        )
    s, _ = _residual_core(g, f, backend, node_budget)
    return s, len(s)


def _three_recolourings(
    h: Graph, fc: list[Colour], pivot: int, backend: str, node_budget: int
) -> tuple[dict[Colour, frozenset[int]], list[str]]:
    """Solve a block for each recolouring of the pivot vertex.

    One shared residual is built for everything except the pivot; the
    pivot's own colour only decides whether it is deleted, loses its
    edges to ZERO vertices, or is left alone.
    """
    ones = {u for u in range(h.n) if fc[u] is Colour.ONE and u != pivot}
    zeros = {u for u in range(h.n) if fc[u] is Colour.ZERO and u != pivot}
    base, old_to_new = delete_vertices(h, ones)
    zeros_base = {old_to_new[u] for u in zeros}
    base = delete_edges_within(base, zeros_base)
    pb = old_to_new[pivot]
    new_to_old = {nv: ov for ov, nv in old_to_new.items()}

    solutions: dict[Colour, frozenset[int]] = {}
    tags: list[str] = []
    for colour in (Colour.ONE, Colour.ZERO, Colour.ZERO_HAT):
        if colour is Colour.ONE:
            r, shrink = delete_vertices(base, {pb})
            vc = min_vertex_cover(r, backend, node_budget=node_budget)
            grow = {nv: ov for ov, nv in shrink.items()}
            s = {new_to_old[grow[w]] for w in vc.cover} | ones | {pivot}
        elif colour is Colour.ZERO:
            r = delete_edges_within(base, zeros_base | {pb})
            vc = min_vertex_cover(r, backend, node_budget=node_budget)
            s = {new_to_old[w] for w in vc.cover} | ones
        else:
            vc = min_vertex_cover(base, backend, node_budget=node_budget)
            s = {new_to_old[w] for w in vc.cover} | ones
        solutions[colour] = frozenset(s)
        tags.append(vc.backend)
    return solutions, tags


def solve_crsds(
    g: Graph, f: Colouring, *, backend: str = "auto", node_budget: int = 0
) -> SolveReport:
    """Minimum f-respecting SD-set of a connected graph.

    Leaf blocks are processed in a precomputed peel order. For each, the
    connection vertex v is tried as ONE, ZERO and ZERO_HAT; the sizes
    can only form three patterns, each of which dictates the kept set
    and v's colour in the rest of the graph.
    """
    if len(f) != g.n:
        raise ValueError("colouring length does not match the vertex count")
    if not g.is_connected():
        raise DisconnectedGraphError("solver requires a connected graph")
    bct = blocks_and_cut_vertices(g)
    order = leaf_component_order(bct)

    fcur = list(f)
    solution: set[int] = set()
    log: list[BlockSolve] = []
    tags: set[str] = set()

    for block_idx, conn in order.entries[:-1]:
        members = sorted(bct.blocks[block_idx])
        h, kept = induced_subgraph(g, members)
        local_f = [fcur[kept[i]] for i in range(h.n)]
        pivot = members.index(conn)
        sols, sol_tags = _three_recolourings(h, local_f, pivot, backend, node_budget)
        tags.update(sol_tags)
        s1 = len(sols[Colour.ONE])
        s0 = len(sols[Colour.ZERO])
        s0h = len(sols[Colour.ZERO_HAT])
        assert s0 <= s0h <= s1 <= s0 + 1, f"impossible size pattern {s1=} {s0h=} {s0=}"
        if s1 == s0h == s0:
            fcur[conn] = Colour.ONE
            chosen = sols[Colour.ONE]
            case = "all-equal"
            recolour: Colour | None = Colour.ONE
        elif s1 > s0h == s0:
            recolour = best_colour((fcur[conn], Colour.ZERO))
            fcur[conn] = recolour
            chosen = sols[Colour.ZERO_HAT]
            case = "one-larger"
        else:
            assert s0 < s0h == s1, f"unreachable size pattern {s1=} {s0h=} {s0=}"
            chosen = sols[Colour.ZERO]
            case = "zero-smaller"
            recolour = None
        solution.update(kept[w] for w in chosen)
        log.append(
            BlockSolve(block_idx, conn, s1, s0, s0h, case, recolour)
        )

    root_idx = order.entries[-1][0]
    members = sorted(bct.blocks[root_idx])
    h, kept = induced_subgraph(g, members)
    local_f = [fcur[kept[i]] for i in range(h.n)]
    s, tag = _residual_core(h, local_f, backend, node_budget)
    tags.add(tag)
    solution.update(kept[w] for w in s)

    result = frozenset(solution)
    verified = is_colour_respecting(g, bct, f, result)
    assert verified, "solver produced a set that violates its colouring"
    return SolveReport(
        solution=result,
        size=len(result),
        block_log=tuple(log),
        backends=tuple(sorted(tags)),
        verified=verified,
    )


def solve_sds(
    g: Graph, *, backend: str = "auto", node_budget: int = 0
) -> SolveReport:
    """Minimum SD-set: the all-ZERO_HAT colouring."""
    report = solve_crsds(
        g, all_zero_hat(g.n), backend=backend, node_budget=node_budget
    )
    bct = blocks_and_cut_vertices(g)
    assert is_sd_set(g, bct, report.solution)
    return report
