"""G_k(q), its subgraphs H and H1, and four independent K3/K4 counters.

The routes deliberately share as little code as possible:

  naive      bitmask enumeration (triangles by edge-neighborhood
             intersection, K4 by triangle extension); the oracle.
  subgraph   K4 = q(q-1)/(12k) * #E(H1); near-linear in q, the production
             path for the Ramsey searches.
  thm1       full (Z_k)^5 grid of scaled 3F2 values.
  thm2       the reduced bracket with R_k, S_k and the X_k orbit sum.
  corollary  the k = 2, 3, 4 closed forms driven by quadratic-form data.

Every division the formulas perform is checked exact; a remainder raises
instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonIntegerResult, SizeLimit
from .finite_field import FieldContext, validate_paley_params
from .hypergeometric import f32_full_grid_sum, f32_indexed
from .jacobi import (EISENSTEIN, TWO_SQUARES, TWO_TIMES_SQUARE, R_k, S_k,
                     solve_quadform)
from .orbits import orbit_decompose

K3_ORACLE_CAP = 1000
K4_ORACLE_CAP = 300
THM1_Q_CAP = 128
THM1_K_CAP = 4


@dataclass(frozen=True)
class CliqueCountResult:
    k: int
    q: int
    m: int
    count: int
    method: str

    def to_json(self) -> dict:
        return {"k": self.k, "q": self.q, "m": self.m,
                "count": str(self.count), "method": self.method}


@dataclass(eq=False)
class PaleyGraph:
    ctx: FieldContext
    k: int
    S: tuple[int, ...]            # sorted k-th power residues
    in_S: np.ndarray              # bool lookup by element index

    @property
    def q(self) -> int:
        return self.ctx.q


def build_graph(ctx: FieldContext, k: int) -> PaleyGraph:
    validate_paley_params(k, ctx)
    S = sorted(ctx.exp_table[0::k])
    in_S = np.zeros(ctx.q, dtype=bool)
    in_S[S] = True
    return PaleyGraph(ctx=ctx, k=k, S=tuple(S), in_S=in_S)


# ---------------------------------------------------------------------------
# bitmask adjacency and the naive clique oracle
# ---------------------------------------------------------------------------

def adjacency_rows(g: PaleyGraph) -> list[int]:
    """Row a = bitmask of neighbors of a (vertices are element indices)."""
    ctx, q = g.ctx, g.q
    if ctx.r == 1:
        base = 0
        for s in g.S:
            base |= 1 << s
        full = (1 << q) - 1
        return [((base << a) | (base >> (q - a))) & full for a in range(q)]
    rows = [0] * q
    for a in range(q):
        row = 0
        for s in g.S:
            row |= 1 << ctx.add(a, s)
        rows[a] = row
    return rows


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def count_cliques(rows: list[int], m: int) -> int:
    """K_m count (m <= 4) of the graph given by bitmask adjacency rows."""
    n = len(rows)
    if m == 1:
        return n
    if m == 2:
        return sum((rows[u] >> (u + 1)).bit_count() for u in range(n))
    count = 0
    if m == 3:
        for u in range(n):
            for v in _iter_bits(rows[u] >> (u + 1)):
                v += u + 1
                count += ((rows[u] & rows[v]) >> (v + 1)).bit_count()
        return count
    if m == 4:
        for u in range(n):
            for v in _iter_bits(rows[u] >> (u + 1)):
                v += u + 1
                muv = rows[u] & rows[v]
                for w in _iter_bits(muv >> (v + 1)):
                    w += v + 1
                    count += ((muv & rows[w]) >> (w + 1)).bit_count()
        return count
    raise ValueError(f"unsupported clique order {m}")


def brute_force_K(g: PaleyGraph, m: int, cap: int | None = None) -> CliqueCountResult:
    limit = cap if cap is not None else (K3_ORACLE_CAP if m == 3 else K4_ORACLE_CAP)
    if g.q > limit:
        raise SizeLimit(f"naive oracle capped at q={limit}, got {g.q}")
    count = count_cliques(adjacency_rows(g), m)
    return CliqueCountResult(g.k, g.q, m, count, "naive")


# ---------------------------------------------------------------------------
# the subgraphs H (on S_k) and H1 (neighbors of 1 inside H)
# ---------------------------------------------------------------------------

def build_H(g: PaleyGraph):
    verts = list(g.S)
    edges = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
             if g.in_S[g.ctx.sub(a, b)]]
    return verts, edges


def h1_vertices(g: PaleyGraph) -> list[int]:
    ctx = g.ctx
    return [a for a in g.S if a != 1 and g.in_S[ctx.sub(a, 1)]]


def build_H1(g: PaleyGraph):
    verts = h1_vertices(g)
    edges = [(a, b) for i, a in enumerate(verts) for b in verts[i + 1:]
             if g.in_S[g.ctx.sub(a, b)]]
    return verts, edges


def subgraph_masks(g: PaleyGraph, verts: list[int]) -> list[int]:
    """Adjacency rows of the induced subgraph on verts, reindexed 0..n-1."""
    if not verts:
        return []
    arr = np.asarray(verts, dtype=np.int64)
    adj = g.in_S[g.ctx.sub_outer(arr, arr)]
    rows = []
    for i in range(len(verts)):
        row = 0
        for j in np.nonzero(adj[i])[0]:
            if j != i:
                row |= 1 << int(j)
        rows.append(row)
    return rows


def h1_edge_count(g: PaleyGraph) -> int:
    verts = h1_vertices(g)
    if not verts:
        return 0
    arr = np.asarray(verts, dtype=np.int64)
    adj = g.in_S[g.ctx.sub_outer(arr, arr)]
    return int(np.triu(adj, k=1).sum())


def h_edge_count(g: PaleyGraph) -> int:
    arr = np.asarray(g.S, dtype=np.int64)
    adj = g.in_S[g.ctx.sub_outer(arr, arr)]
    return int(np.triu(adj, k=1).sum())


# ---------------------------------------------------------------------------
# closed-form counters
# ---------------------------------------------------------------------------

def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise NonIntegerResult(f"{what}: {num} is not divisible by {den}")
    return num // den


def K4_subgraph_method(g: PaleyGraph) -> CliqueCountResult:
    count = _exact_div(g.q * (g.q - 1) * h1_edge_count(g), 12 * g.k, "K4 subgraph")
    return CliqueCountResult(g.k, g.q, 4, count, "subgraph")


def K3_closed(ctx: FieldContext, k: int) -> CliqueCountResult:
    validate_paley_params(k, ctx)
    q = ctx.q
    count = _exact_div(q * (q - 1) * (R_k(ctx, k) + q - 3 * k + 1),
                       6 * k ** 3, "K3 closed form")
    return CliqueCountResult(k, q, 3, count, "thm")


def K3_corollary(ctx: FieldContext, k: int) -> CliqueCountResult:
    validate_paley_params(k, ctx)
    q = ctx.q
    if k == 2:
        count = _exact_div(q * (q - 1) * (q - 5), 2 ** 4 * 3, "K3 k=2")
    elif k == 3:
        c = solve_quadform(EISENSTEIN, ctx).a
        count = _exact_div(q * (q - 1) * (q + c - 8), 2 * 3 ** 4, "K3 k=3")
    elif k == 4:
        x = solve_quadform(TWO_SQUARES, ctx).a
        count = _exact_div(q * (q - 1) * (q - 6 * x - 11), 2 ** 7 * 3, "K3 k=4")
    else:
        raise ValueError("K3 corollary forms exist for k = 2, 3, 4 only")
    return CliqueCountResult(k, q, 3, count, "corollary")


def K4_thm1(ctx: FieldContext, k: int, *, q_cap: int = THM1_Q_CAP,
            k_cap: int = THM1_K_CAP) -> CliqueCountResult:
    validate_paley_params(k, ctx)
    if ctx.q > q_cap or k > k_cap:
        raise SizeLimit(f"thm1 capped at q<={q_cap}, k<={k_cap}")
    q = ctx.q
    total = f32_full_grid_sum(ctx, k).as_integer()
    count = _exact_div(q * (q - 1) * total, 24 * k ** 6, "K4 full grid")
    return CliqueCountResult(k, q, 4, count, "thm1")


def xk_orbit_sum(ctx: FieldContext, k: int) -> int:
    """Sum of q^2 * 3F2(t | 1) over X_k, one evaluation per orbit."""
    dec = orbit_decompose(k)
    total = None
    for rep, size in dec.rep_sizes():
        v = f32_indexed(ctx, k, rep).value * size
        total = v if total is None else total + v
    return total.as_integer()


def K4_thm2(ctx: FieldContext, k: int) -> CliqueCountResult:
    validate_paley_params(k, ctx)
    q = ctx.q
    R = R_k(ctx, k)
    S = S_k(ctx, k)
    bracket = (10 * R * R + 5 * (q - 2 * k ** 2 + 1) * R - 15 * S
               + q * q - 5 * (2 * k ** 2 - 3 * k + 2) * q
               + 15 * k ** 3 - 10 * k ** 2 + 1
               + xk_orbit_sum(ctx, k))
    count = _exact_div(q * (q - 1) * bracket, 24 * k ** 6, "K4 reduced bracket")
    return CliqueCountResult(k, q, 4, count, "thm2")


def K4_corollary(ctx: FieldContext, k: int) -> CliqueCountResult:
    validate_paley_params(k, ctx)
    q = ctx.q
    if k == 2:
        y = solve_quadform(TWO_SQUARES, ctx).b
        count = _exact_div(q * (q - 1) * ((q - 9) ** 2 - 4 * y * y),
                           2 ** 9 * 3, "K4 k=2")
    elif k == 3:
        c = solve_quadform(EISENSTEIN, ctx).a
        hyp = f32_indexed(ctx, 3, (1, 1, 2, 0, 0)).value.as_integer()
        bracket = q * q + 5 * q * (c - 11) + 10 * c * c - 85 * c + 316 + 12 * hyp
        count = _exact_div(q * (q - 1) * bracket, 2 ** 3 * 3 ** 7, "K4 k=3")
    elif k == 4:
        x = solve_quadform(TWO_SQUARES, ctx).a
        u = solve_quadform(TWO_TIMES_SQUARE, ctx).a
        hyp1 = f32_indexed(ctx, 4, (1, 1, 3, 0, 0)).value.as_integer()
        hyp2 = f32_indexed(ctx, 4, (1, 2, 2, 0, 0)).value.as_integer()
        bracket = (q * q - 2 * q * (15 * x + 101) + 304 * x * x
                   + (930 - 40 * u) * x + 801 + 120 * u * u
                   + 12 * hyp1 + 30 * hyp2)
        count = _exact_div(q * (q - 1) * bracket, 2 ** 15 * 3, "K4 k=4")
    else:
        raise ValueError("K4 corollary forms exist for k = 2, 3, 4 only")
    return CliqueCountResult(k, q, 4, count, "corollary")


def clique_count(ctx: FieldContext, k: int, m: int, method: str = "auto") -> CliqueCountResult:
    """Dispatch used by the CLI; 'auto' picks the scalable exact route."""
    if m == 3:
        if method in ("auto", "thm"):
            return K3_closed(ctx, k)
        if method == "naive":
            return brute_force_K(build_graph(ctx, k), 3)
        if method == "corollary":
            return K3_corollary(ctx, k)
        if method == "subgraph":
            g = build_graph(ctx, k)
            count = _exact_div(ctx.q * h_edge_count(g), 3, "K3 via H edges")
            return CliqueCountResult(k, ctx.q, 3, count, "subgraph")
        raise ValueError(f"unknown K3 method {method!r}")
    if m == 4:
        if method in ("auto", "subgraph"):
            return K4_subgraph_method(build_graph(ctx, k))
        if method == "naive":
            return brute_force_K(build_graph(ctx, k), 4)
        if method == "thm1":
            return K4_thm1(ctx, k)
        if method == "thm2":
            return K4_thm2(ctx, k)
        if method == "corollary":
            return K4_corollary(ctx, k)
        raise ValueError(f"unknown K4 method {method!r}")
    raise ValueError("clique order must be 3 or 4")
