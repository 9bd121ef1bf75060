# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled branch-and-bound vertex-cover kernel for n <= 64.

Mirror of pure.vc_search over uint64 masks: same reductions, same
lower bound, same branching order, therefore the same cover and the
same node count on every input both can handle.
"""

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define POPCOUNT64(x) __builtin_popcountll(x)
    #define CTZ64(x) __builtin_ctzll(x)
    #else
    static int POPCOUNT64(unsigned long long x) { int c = 0; while (x) { x &= x - 1; ++c; } return c; }
    static int CTZ64(unsigned long long x) { int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c; }
    #endif
    """
    int POPCOUNT64(uint64_t x) nogil
    int CTZ64(uint64_t x) nogil


cdef struct SearchState:
    uint64_t adj[64]
    uint64_t best_mask
    int best_size
    long long nodes
    long long node_budget
    bint budget_hit


cdef void walk(SearchState* st, uint64_t alive, int size, uint64_t cover) noexcept nogil:
    cdef uint64_t pending, d, u_bit, matched, cand, v_bit, nbrs
    cdef int v, u, leaf, lb, pick, pick_deg, dd
    cdef bint has_edge

    if st.budget_hit:
        return
    st.nodes += 1
    if st.node_budget and st.nodes > st.node_budget:
        st.budget_hit = True
        return

    while True:
        pending = alive
        has_edge = False
        leaf = -1
        while pending:
            v = CTZ64(pending)
            pending &= pending - 1
            d = st.adj[v] & alive
            if d:
                has_edge = True
                if d & (d - 1) == 0:
                    leaf = v
                    break
        if not has_edge:
            if size < st.best_size:
                st.best_size = size
                st.best_mask = cover
            return
        if leaf < 0:
            break
        u_bit = st.adj[leaf] & alive
        cover |= u_bit
        size += 1
        alive &= ~(u_bit | (<uint64_t>1 << leaf))
        if size >= st.best_size:
            return

    matched = 0
    lb = 0
    pending = alive
    while pending:
        u = CTZ64(pending)
        pending &= pending - 1
        if matched & (<uint64_t>1 << u):
            continue
        cand = st.adj[u] & alive & ~matched
        if cand:
            v_bit = cand & (~cand + 1)
            matched |= (<uint64_t>1 << u) | v_bit
            pending &= ~v_bit
            lb += 1
    if size + lb >= st.best_size:
        return

    pick = -1
    pick_deg = -1
    pending = alive
    while pending:
        v = CTZ64(pending)
        pending &= pending - 1
        dd = POPCOUNT64(st.adj[v] & alive)
        if dd > pick_deg:
            pick_deg = dd
            pick = v

    v_bit = <uint64_t>1 << pick
    walk(st, alive & ~v_bit, size + 1, cover | v_bit)
    nbrs = st.adj[pick] & alive
    walk(st, alive & ~(nbrs | v_bit), size + POPCOUNT64(nbrs), cover | nbrs)


BACKEND_NAME = "compiled"


def vc_search(n, adj_masks, node_budget=0):
    """Minimum vertex cover as (cover_mask, nodes_expanded).

    Same contract as pure.vc_search, restricted to n <= 64.
    """
    cdef int cn = n
    if cn < 0 or cn > 64:
        raise ValueError("compiled kernel handles at most 64 vertices")
    cdef SearchState st
    cdef int i
    for i in range(cn):
        st.adj[i] = <uint64_t>adj_masks[i]
    st.best_size = cn + 1
    st.best_mask = 0
    st.nodes = 0
    st.node_budget = node_budget
    st.budget_hit = False
    cdef uint64_t full
    if cn == 64:
        full = <uint64_t>0xFFFFFFFFFFFFFFFFULL
    elif cn == 0:
        full = 0
    else:
        full = (<uint64_t>1 << cn) - 1
    with nogil:
        walk(&st, full, 0, 0)
    if st.budget_hit:
        raise RuntimeError("node budget exceeded")
    return (int(st.best_mask), int(st.nodes))
