"""Block-cutpoint decomposition.

Blocks are maximal 2-connected subgraphs; a bridge counts as a block on
its two endpoints. For a connected graph the bipartite graph on blocks
and cut vertices (adjacency by containment) is a tree, which drives both
the leaf-component solver loop and the rounding step of the LP scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DisconnectedGraphError
from .graph import Graph

# A node of the block-cut tree: ("block", index) or ("cut", vertex).
TreeNode = tuple[str, int]


@dataclass(frozen=True)
class BlockCutTree:
    n: int
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_of_edge: dict[tuple[int, int], int] = field(repr=False)
    blocks_of_vertex: tuple[tuple[int, ...], ...] = field(repr=False)

    def is_cut(self, v: int) -> bool:
        return v in self.cut_vertices

    def blocks_containing(self, v: int) -> tuple[int, ...]:
        return self.blocks_of_vertex[v]

    def tree_edges(self) -> list[tuple[int, int]]:
        """(block index, cut vertex) containment pairs."""
        return [
            (i, v)
            for i, blk in enumerate(self.blocks)
            for v in sorted(blk & self.cut_vertices)
        ]


def blocks_and_cut_vertices(g: Graph) -> BlockCutTree:
    """Decompose a connected graph into blocks and cut vertices.

    Lowpoint DFS from vertex 0 with sorted neighbour order; blocks are
    reported sorted by the smallest DFS discovery time they contain, so
    the decomposition is reproducible.
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if not g.is_connected():
        raise DisconnectedGraphError("block decomposition requires a connected graph")
    if g.n == 1:
        return BlockCutTree(
            n=1,
            blocks=(frozenset({0}),),
            cut_vertices=frozenset(),
            block_of_edge={},
            blocks_of_vertex=((0,),),
        )

    n = g.n
    order = [sorted(g.adj[v]) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    ptr = [0] * n
    edge_stack: list[tuple[int, int]] = []
    block_edges: list[list[tuple[int, int]]] = []

    disc[0] = low[0] = 0
    timer = 1
    stack = [0]
    while stack:
        u = stack[-1]
        if ptr[u] < len(order[u]):
            w = order[u][ptr[u]]
            ptr[u] += 1
            if disc[w] == -1:
                parent[w] = u
                edge_stack.append((u, w))
                disc[w] = low[w] = timer
                timer += 1
                stack.append(w)
            elif w != parent[u] and disc[w] < disc[u]:
                edge_stack.append((u, w))
                low[u] = min(low[u], disc[w])
        else:
            stack.pop()
            if stack:
                p = stack[-1]
                low[p] = min(low[p], low[u])
                if low[u] >= disc[p]:
                    comp: list[tuple[int, int]] = []
                    while True:
                        e = edge_stack.pop()
                        comp.append(e)
                        if e == (p, u):
                            break
                    block_edges.append(comp)
    assert not edge_stack, "edge stack must empty out on a connected graph"

    block_sets = [frozenset(v for e in comp for v in e) for comp in block_edges]
    by_discovery = sorted(
        range(len(block_sets)),
        key=lambda i: (min(disc[v] for v in block_sets[i]), sorted(block_sets[i])),
    )
    blocks = tuple(block_sets[i] for i in by_discovery)

    block_of_edge: dict[tuple[int, int], int] = {}
    for new_idx, old_idx in enumerate(by_discovery):
        for u, w in block_edges[old_idx]:
            e = (u, w) if u < w else (w, u)
            block_of_edge[e] = new_idx

    membership: list[list[int]] = [[] for _ in range(n)]
    for i, blk in enumerate(blocks):
        for v in blk:
            membership[v].append(i)
    blocks_of_vertex = tuple(tuple(sorted(b)) for b in membership)
    cut_vertices = frozenset(v for v in range(n) if len(blocks_of_vertex[v]) >= 2)

    return BlockCutTree(
        n=n,
        blocks=blocks,
        cut_vertices=cut_vertices,
        block_of_edge=block_of_edge,
        blocks_of_vertex=blocks_of_vertex,
    )


@dataclass(frozen=True)
class LeafComponentOrder:
    """Blocks in an order where each is a leaf of the remaining tree.

    Every entry is (block index, connection vertex); the final entry is
    the root block with connection vertex None.
    """

    entries: tuple[tuple[int, int | None], ...]


def leaf_component_order(bct: BlockCutTree) -> LeafComponentOrder:
    """Deterministic peel order; ties broken by smallest block index."""
    remaining = set(range(len(bct.blocks)))
    count = {v: len(bct.blocks_of_vertex[v]) for v in bct.cut_vertices}

    def active_cuts(i: int) -> list[int]:
        return [v for v in sorted(bct.blocks[i]) if count.get(v, 0) >= 2]

    entries: list[tuple[int, int | None]] = []
    while len(remaining) > 1:
        leaf = min(i for i in remaining if len(active_cuts(i)) == 1)
        conn = active_cuts(leaf)[0]
        entries.append((leaf, conn))
        remaining.remove(leaf)
        for w in bct.blocks[leaf]:
            if w in count:
                count[w] -= 1
    entries.append((min(remaining), None))
    return LeafComponentOrder(tuple(entries))


@dataclass(frozen=True)
class RootedBlockTree:
    root: TreeNode
    parent: dict[TreeNode, TreeNode | None]
    children: dict[TreeNode, tuple[TreeNode, ...]]
    depth: dict[TreeNode, int]

    def child_blocks_of_cut(self, v: int) -> tuple[int, ...]:
        return tuple(i for kind, i in self.children[("cut", v)] if kind == "block")

    def parent_block_of_cut(self, v: int) -> int | None:
        p = self.parent[("cut", v)]
        return p[1] if p is not None else None


def root_block_tree(bct: BlockCutTree, root: TreeNode) -> RootedBlockTree:
    """Orient the block-cut tree away from ``root`` by BFS."""
    parent: dict[TreeNode, TreeNode | None] = {root: None}
    children: dict[TreeNode, list[TreeNode]] = {}
    depth: dict[TreeNode, int] = {root: 0}
    queue = [root]
    while queue:
        node = queue.pop(0)
        kind, idx = node
        if kind == "block":
            nbrs: list[TreeNode] = [
                ("cut", v) for v in sorted(bct.blocks[idx] & bct.cut_vertices)
            ]
        else:
            nbrs = [("block", i) for i in bct.blocks_of_vertex[idx]]
        kids = [nb for nb in nbrs if nb != parent[node]]
        children[node] = kids
        for nb in kids:
            parent[nb] = node
            depth[nb] = depth[node] + 1
            queue.append(nb)
    return RootedBlockTree(
        root=root,
        parent=parent,
        children={k: tuple(v) for k, v in children.items()},
        depth=depth,
    )
