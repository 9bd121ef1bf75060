"""Polynomial verification of simultaneous domination.

A set dominates every spanning tree of a connected graph exactly when
each vertex v outside it either has all its neighbours inside (v not a
cut vertex) or has all its neighbours inside some single block
containing v (v a cut vertex). This check replaces enumerating the
exponentially many spanning trees; the oracle module validates the
equivalence on small instances.
"""

from __future__ import annotations

import enum
from typing import AbstractSet, Sequence

from .blocks import BlockCutTree
from .graph import Graph


class Colour(enum.IntEnum):
    """Vertex colours ordered worst to best.

    ZERO_HAT: not in the set, still needs simultaneous domination.
    ZERO: not in the set, exempt from domination.
    ONE: forced into the set.
    """

    ZERO_HAT = 0
    ZERO = 1
    ONE = 2


# Total per-vertex colour assignment.
Colouring = Sequence[Colour]

COLOUR_TOKENS = {"1": Colour.ONE, "0": Colour.ZERO, "0hat": Colour.ZERO_HAT}
TOKEN_OF_COLOUR = {c: t for t, c in COLOUR_TOKENS.items()}


def all_zero_hat(n: int) -> list[Colour]:
    return [Colour.ZERO_HAT] * n


def domination_requirements(g: Graph, bct: BlockCutTree) -> list[list[frozenset[int]]]:
    """Per-vertex alternatives: v is simultaneously dominated by s iff
    v is in s or all vertices of some alternative are in s."""
    reqs: list[list[frozenset[int]]] = []
    for v in range(g.n):
        if bct.is_cut(v):
            reqs.append(
                [g.adj[v] & bct.blocks[b] for b in bct.blocks_of_vertex[v]]
            )
        else:
            reqs.append([g.adj[v]])
    return reqs


def is_simultaneously_dominated(
    g: Graph, bct: BlockCutTree, s: AbstractSet[int], v: int
) -> bool:
    if v in s:
        return True
    if not bct.is_cut(v):
        return g.adj[v] <= s
    return any(
        (g.adj[v] & bct.blocks[b]) <= s for b in bct.blocks_of_vertex[v]
    )


def is_sd_set(g: Graph, bct: BlockCutTree, s: AbstractSet[int]) -> bool:
    """True iff every vertex is simultaneously dominated by s."""
    return all(is_simultaneously_dominated(g, bct, s, v) for v in range(g.n))


def sd_witness(g: Graph, bct: BlockCutTree, s: AbstractSet[int]) -> int | None:
    """Smallest vertex not simultaneously dominated, or None if s is valid."""
    for v in range(g.n):
        if not is_simultaneously_dominated(g, bct, s, v):
            return v
    return None


def is_colour_respecting(
    g: Graph, bct: BlockCutTree, colouring: Colouring, s: AbstractSet[int]
) -> bool:
    """True iff s contains every ONE vertex and simultaneously dominates
    every ZERO_HAT vertex."""
    if len(colouring) != g.n:
        raise ValueError(f"colouring has {len(colouring)} entries for n={g.n}")
    for v in range(g.n):
        if colouring[v] is Colour.ONE and v not in s:
            return False
        if colouring[v] is Colour.ZERO_HAT and not is_simultaneously_dominated(
            g, bct, s, v
        ):
            return False
    return True
