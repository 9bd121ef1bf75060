"""Integer/linear programming route to simultaneous domination.

The model has one x-variable per vertex and one y-variable per
(cut vertex, block) pair. Non-cut vertices contribute edge rows like a
vertex cover; cut vertices are covered blockwise: y_{v,B} may only rise
to 1 when every block neighbour is picked, and some block (or v itself)
must cover v. Rounding the LP relaxation in three steps yields a
2-approximation; extending any SD-set by busy cut vertices yields a
vertex cover of size at most 2|S| - 1, which in turn gives a
4-approximation from the matching cover.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import AbstractSet

from .blocks import BlockCutTree, blocks_and_cut_vertices, root_block_tree
from .domination import is_sd_set
from .errors import BudgetExceededError, InvalidSdSetError
from .graph import Graph
from .simplex import OPTIMAL, simplex_min
from .vertexcover import is_vertex_cover, matching_2approx_vc

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LpRow:
    kind: str  # "adjacent-pair" | "block-neighbour" | "cut-cover"
    coeffs: dict[int, int]
    rhs: int
    about: tuple[int, ...]


@dataclass(frozen=True)
class LpModel:
    """Columns 0..n-1 are x-variables; y-variables follow in y_keys order."""

    n: int
    y_keys: tuple[tuple[int, int], ...]
    rows: tuple[LpRow, ...]
    integral: bool

    @property
    def num_cols(self) -> int:
        return self.n + len(self.y_keys)

    def y_col(self, v: int, b: int) -> int:
        return self.n + self.y_keys.index((v, b))

    def row_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for row in self.rows:
            counts[row.kind] = counts.get(row.kind, 0) + 1
        return counts


@dataclass(frozen=True)
class LpSolution:
    status: str
    objective: Fraction
    x: tuple[Fraction, ...]
    y: dict[tuple[int, int], Fraction]


def build_sds_ip(g: Graph, bct: BlockCutTree, *, integral: bool = True) -> LpModel:
    """The domination model; integral=False gives the LP relaxation.

    Row order: one adjacent-pair row per (non-cut v, neighbour u), then
    block-neighbour rows per (cut v, block, block neighbour), then one
    cut-cover row per cut vertex, each group sorted by vertex index.
    """
    if g.n < 2:
        raise ValueError("the model needs at least two vertices")
    cut = sorted(bct.cut_vertices)
    y_keys: list[tuple[int, int]] = []
    for v in cut:
        for b in bct.blocks_of_vertex[v]:
            y_keys.append((v, b))
    col_of = {key: g.n + i for i, key in enumerate(y_keys)}

    rows: list[LpRow] = []
    for v in range(g.n):
        if bct.is_cut(v):
            continue
        for u in sorted(g.adj[v]):
            rows.append(
                LpRow("adjacent-pair", {u: 1, v: 1}, 1, (v, u))
            )
    for v in cut:
        for b in bct.blocks_of_vertex[v]:
            for u in sorted(g.adj[v] & bct.blocks[b]):
                rows.append(
                    LpRow(
                        "block-neighbour",
                        {u: 1, col_of[(v, b)]: -1},
                        0,
                        (v, b, u),
                    )
                )
    for v in cut:
        coeffs = {col_of[(v, b)]: 1 for b in bct.blocks_of_vertex[v]}
        coeffs[v] = 1
        rows.append(LpRow("cut-cover", coeffs, 1, (v,)))
    return LpModel(g.n, tuple(y_keys), tuple(rows), integral)


def solve_lp_simplex(m: LpModel) -> LpSolution:
    """Optimal basic solution of the relaxation, exactly."""
    if m.integral:
        raise ValueError("simplex solves the relaxation; build with integral=False")
    objective = [1] * m.n + [0] * len(m.y_keys)
    result = simplex_min(
        m.num_cols, objective, [(row.coeffs, row.rhs) for row in m.rows]
    )
    assert result.status == OPTIMAL, f"model family is never {result.status}"
    values = result.values
    return LpSolution(
        status=result.status,
        objective=result.objective,
        x=tuple(values[: m.n]),
        y={key: values[m.n + i] for i, key in enumerate(m.y_keys)},
    )


def _assert_lp_feasible(
    g: Graph,
    bct: BlockCutTree,
    x: list[Fraction],
    y: dict[tuple[int, int], Fraction],
    stage: str,
) -> None:
    for v in range(g.n):
        if bct.is_cut(v):
            continue
        for u in g.adj[v]:
            assert x[u] + x[v] >= 1, f"{stage}: pair row ({v},{u}) broken"
    for (v, b), yv in y.items():
        for u in g.adj[v] & bct.blocks[b]:
            assert x[u] >= yv, f"{stage}: block row ({v},{b},{u}) broken"
    for v in sorted(bct.cut_vertices):
        total = sum(
            (y[(v, b)] for b in bct.blocks_of_vertex[v]), start=Fraction(0)
        )
        assert total + x[v] >= 1, f"{stage}: cover row ({v}) broken"


def round_lp(
    g: Graph,
    bct: BlockCutTree,
    sol: LpSolution,
    *,
    check_feasibility: bool = False,
) -> frozenset[int]:
    """Three rounding steps turning an LP optimum into an SD-set.

    Step 1 rounds every x >= 1/2 up and refreshes each y to the minimum
    of its block neighbours. Step 2 walks cut vertices bottom-up: one
    not yet covered by itself or a full block is set to 1, paying for it
    by zeroing the cheapest fractional neighbour in each child block.
    Step 3 zeroes the remaining fractionals. Variables that reach 1 are
    never decreased again.
    """
    assert all(xv <= 1 for xv in sol.x), "relaxation optimum exceeds box"
    x = [Fraction(1) if xv >= HALF else xv for xv in sol.x]

    def fresh_y(v: int, b: int) -> Fraction:
        return min(x[u] for u in g.adj[v] & bct.blocks[b])

    y = {key: fresh_y(*key) for key in sol.y}
    if check_feasibility:
        _assert_lp_feasible(g, bct, x, y, "after first rounding")

    cuts = sorted(bct.cut_vertices)
    if cuts:
        tree = root_block_tree(bct, ("cut", cuts[0]))
        bottom_up = sorted(cuts, key=lambda v: (-tree.depth[("cut", v)], v))
        for v in bottom_up:
            if x[v] == 1 or any(
                y[(v, b)] == 1 for b in bct.blocks_of_vertex[v]
            ):
                continue
            x[v] = Fraction(1)
            touched = {v}
            for b in tree.child_blocks_of_cut(v):
                candidates = sorted(g.adj[v] & bct.blocks[b])
                u = min(candidates, key=lambda w: (x[w], w))
                assert x[u] < 1, "argmin picked an integral variable"
                x[u] = Fraction(0)
                touched.add(u)
            for key in y:
                w, b = key
                if touched & (g.adj[w] & bct.blocks[b]):
                    y[key] = fresh_y(w, b)
            if check_feasibility:
                _assert_lp_feasible(g, bct, x, y, f"after rounding cut vertex {v}")

    out = frozenset(v for v in range(g.n) if x[v] == 1)
    if check_feasibility:
        xi = [Fraction(1) if v in out else Fraction(0) for v in range(g.n)]
        yi = {key: min(xi[u] for u in g.adj[key[0]] & bct.blocks[key[1]]) for key in y}
        _assert_lp_feasible(g, bct, xi, yi, "after third rounding")
    assert is_sd_set(g, bct, out), "rounded set fails the domination check"
    return out


def approx2_sds(
    g: Graph, *, check_feasibility: bool = False
) -> tuple[frozenset[int], Fraction]:
    """LP-rounding approximation; returns the set and the LP lower bound."""
    bct = blocks_and_cut_vertices(g)
    model = build_sds_ip(g, bct, integral=False)
    sol = solve_lp_simplex(model)
    rounded = round_lp(g, bct, sol, check_feasibility=check_feasibility)
    assert len(rounded) <= 2 * sol.objective, "rounding exceeded the 2x guarantee"
    return rounded, sol.objective


def sds_to_vertex_cover(
    g: Graph, bct: BlockCutTree, s: AbstractSet[int]
) -> frozenset[int]:
    """Extend an SD-set to a vertex cover, adding at most |s| - 1 vertices.

    The block tree is rooted at a block meeting s; a cut vertex joins
    the cover whenever one of its child blocks contains an s-vertex.
    """
    if g.n < 2:
        raise ValueError("cover extension is defined for graphs with n >= 2")
    if not is_sd_set(g, bct, s):
        raise InvalidSdSetError("input set is not a simultaneous dominating set")
    root_block = next(
        i for i, blk in enumerate(bct.blocks) if blk & frozenset(s)
    )
    tree = root_block_tree(bct, ("block", root_block))
    cover = set(s)
    for v in sorted(bct.cut_vertices):
        below = set()
        for b in tree.child_blocks_of_cut(v):
            below |= bct.blocks[b]
        if below & set(s):
            cover.add(v)
    result = frozenset(cover)
    assert is_vertex_cover(g, result), "extension missed an edge"
    assert len(result) <= 2 * len(set(s)) - 1, "extension exceeded the size bound"
    return result


def approx4_sds_via_vc(g: Graph) -> frozenset[int]:
    """The matching-based vertex cover, which is itself an SD-set."""
    out = matching_2approx_vc(g)
    bct = blocks_and_cut_vertices(g)
    assert is_sd_set(g, bct, out)
    return out


def ip_optimum_bruteforce(m: LpModel, *, vertex_budget: int = 16) -> int:
    """Minimum objective over binary assignments satisfying every row.

    y-variables carry no objective weight, so for each x the best
    candidate sets y_{v,B} = 1 exactly when every block-neighbour row of
    that column allows it; all rows are then evaluated literally.
    """
    if m.n > vertex_budget:
        raise BudgetExceededError(
            f"{m.n} vertices exceeds the IP enumeration budget of {vertex_budget}"
        )
    supporters: dict[int, list[int]] = {m.n + i: [] for i in range(len(m.y_keys))}
    for row in m.rows:
        if row.kind == "block-neighbour":
            ycol = next(c for c, a in row.coeffs.items() if a == -1)
            xcol = next(c for c, a in row.coeffs.items() if a == 1)
            supporters[ycol].append(xcol)
    best: int | None = None
    for bits in range(1 << m.n):
        value = [0] * m.num_cols
        for v in range(m.n):
            value[v] = (bits >> v) & 1
        for ycol, xs in supporters.items():
            value[ycol] = 1 if all(value[u] for u in xs) else 0
        ok = all(
            sum(a * value[c] for c, a in row.coeffs.items()) >= row.rhs
            for row in m.rows
        )
        if ok:
            size = sum(value[: m.n])
            if best is None or size < best:
                best = size
    assert best is not None, "the all-ones assignment is always feasible"
    return best


def lp_vertex_enumeration_optimum(
    m: LpModel, *, system_budget: int = 200_000
) -> Fraction:
    """LP optimum by enumerating basic solutions of the small polytope.

    Every subset of n_vars constraint planes (model rows plus the
    nonnegativity bounds) is solved as an equality system; feasible
    solutions are scored by the objective. Exists to cross-check the
    simplex on tiny models only.
    """
    nv = m.num_cols
    planes: list[tuple[tuple[Fraction, ...], Fraction]] = []
    seen = set()
    for row in m.rows:
        vec = tuple(
            Fraction(row.coeffs.get(c, 0)) for c in range(nv)
        )
        if (vec, row.rhs) not in seen:
            seen.add((vec, row.rhs))
            planes.append((vec, Fraction(row.rhs)))
    for c in range(nv):
        vec = tuple(Fraction(1 if i == c else 0) for i in range(nv))
        planes.append((vec, Fraction(0)))
    if comb(len(planes), nv) > system_budget:
        raise BudgetExceededError(
            f"{comb(len(planes), nv)} candidate systems exceed the budget"
        )

    best: Fraction | None = None
    for chosen in itertools.combinations(planes, nv):
        a = [list(vec) + [rhs] for vec, rhs in chosen]
        point = _solve_square(a, nv)
        if point is None:
            continue
        if any(v < 0 for v in point):
            continue
        if any(
            sum(vec[c] * point[c] for c in range(nv)) < rhs
            for vec, rhs in planes[: len(planes) - nv]
        ):
            continue
        objective = sum(point[: m.n], start=Fraction(0))
        if best is None or objective < best:
            best = objective
    assert best is not None, "the model family always has feasible vertices"
    return best


def _solve_square(a: list[list[Fraction]], nv: int) -> list[Fraction] | None:
    """Gaussian elimination on an augmented nv x (nv+1) system."""
    for col in range(nv):
        pivot = next((r for r in range(col, nv) if a[r][col] != 0), None)
        if pivot is None:
            return None
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(nv):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [v - f * w for v, w in zip(a[r], a[col])]
    return [a[r][nv] for r in range(nv)]


def write_lp(m: LpModel) -> str:
    """Human-readable LP text (CPLEX-style) for external cross-checking."""

    def name(c: int) -> str:
        if c < m.n:
            return f"x{c}"
        v, b = m.y_keys[c - m.n]
        return f"y_{v}_{b}"

    lines = ["Minimize", " obj: " + " + ".join(f"x{v}" for v in range(m.n))]
    lines.append("Subject To")
    for i, row in enumerate(m.rows, start=1):
        terms = []
        for c in sorted(row.coeffs):
            a = row.coeffs[c]
            if not terms:
                terms.append(f"{a} {name(c)}" if a != 1 else name(c))
            else:
                sign = "+" if a > 0 else "-"
                mag = abs(a)
                terms.append(
                    f"{sign} {mag} {name(c)}" if mag != 1 else f"{sign} {name(c)}"
                )
        lines.append(f" r{i}: " + " ".join(terms) + f" >= {row.rhs}")
    lines.append("Bounds")
    for c in range(m.num_cols):
        if m.integral:
            lines.append(f" 0 <= {name(c)} <= 1")
        else:
            lines.append(f" {name(c)} >= 0")
    if m.integral:
        lines.append("Binaries")
        lines.append(" " + " ".join(name(c) for c in range(m.num_cols)))
    lines.append("End")
    return "\n".join(lines) + "\n"
