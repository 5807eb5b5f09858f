"""Graph construction, the clique-count routes, and the subgraph laws."""

import pytest

from gpaley.errors import InvalidCongruence, NonIntegerResult, SizeLimit
from gpaley.jacobi import EISENSTEIN, solve_quadform
from gpaley.paley_graph import (CliqueCountResult, K3_closed, K3_corollary,
                                K4_corollary, K4_subgraph_method, K4_thm1,
                                K4_thm2, _exact_div, adjacency_rows,
                                brute_force_K, build_graph, build_H, build_H1,
                                clique_count, count_cliques, h1_vertices)
from gpaley.verify import (check_clique_recursions, check_strong_regularity,
                           check_subgraph_props)
from helpers import get_field, paley_pairs


def test_h_vertices_q13():
    g = build_graph(get_field(13), 2)
    verts, edges = build_H(g)
    assert verts == [1, 3, 4, 9, 10, 12]
    assert len(verts) == (13 - 1) // 2
    deg = {v: 0 for v in verts}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    assert len(set(deg.values())) == 1   # H is regular


def test_h1_vertices_q13():
    g = build_graph(get_field(13), 2)
    assert h1_vertices(g) == [4, 10]
    verts, edges = build_H1(g)
    assert verts == [4, 10]
    assert len(edges) == (1 if g.in_S[g.ctx.sub(10, 4)] else 0)


def test_edge_count_G17():
    g = build_graph(get_field(17), 2)
    rows = adjacency_rows(g)
    edges = sum(r.bit_count() for r in rows) // 2
    assert edges == 17 * 16 // 4 == 68


def test_degree_regular():
    for k, q in paley_pairs(100):
        g = build_graph(get_field(q), k)
        rows = adjacency_rows(g)
        assert all(r.bit_count() == (q - 1) // k for r in rows)
        assert all(not (rows[v] >> v) & 1 for v in range(q))


def test_invalid_congruence_propagates():
    with pytest.raises(InvalidCongruence):
        build_graph(get_field(13), 4)


def test_naive_counts_known_values():
    assert brute_force_K(build_graph(get_field(17), 2), 4).count == 0
    assert brute_force_K(build_graph(get_field(13), 2), 3).count == 26
    assert 13 * 12 * 8 // 48 == 26
    assert brute_force_K(build_graph(get_field(29), 2), 4).count == 203
    assert 29 * 28 * (400 - 16) // 1536 == 203


def test_naive_cap():
    with pytest.raises(SizeLimit):
        brute_force_K(build_graph(get_field(1009), 2), 4)


def test_count_cliques_complete_graph():
    n = 7
    rows = [((1 << n) - 1) ^ (1 << i) for i in range(n)]
    assert count_cliques(rows, 2) == 21
    assert count_cliques(rows, 3) == 35
    assert count_cliques(rows, 4) == 35


def test_subgraph_method_matches_naive():
    for k, q in paley_pairs(250):
        g = build_graph(get_field(q), k)
        assert K4_subgraph_method(g).count == brute_force_K(g, 4).count


def test_subgraph_method_paper_zeros():
    assert K4_subgraph_method(build_graph(get_field(127), 3)).count == 0
    assert K4_subgraph_method(build_graph(get_field(457), 4)).count == 0
    assert K4_subgraph_method(build_graph(get_field(29), 2)).count == 203


def test_k3_closed_and_zeros():
    assert K3_closed(get_field(5), 2).count == 0
    assert K3_closed(get_field(16), 3).count == 0
    assert K3_closed(get_field(41), 4).count == 0
    assert K3_closed(get_field(13), 2).count == 26


def test_k3_g3_13_vanishes():
    ctx = get_field(13)
    assert solve_quadform(EISENSTEIN, ctx).a == -5
    assert K3_corollary(ctx, 3).count == 0
    assert brute_force_K(build_graph(ctx, 3), 3).count == 0


def test_k3_routes_agree():
    for k, q in paley_pairs(200):
        ctx = get_field(q)
        expect = K3_closed(ctx, k).count
        assert brute_force_K(build_graph(ctx, k), 3).count == expect
        if k in (2, 3, 4):
            assert K3_corollary(ctx, k).count == expect


def test_k4_thm1_examples():
    assert K4_thm1(get_field(17), 2).count == 0
    ctx25 = get_field(25)
    assert K4_thm1(ctx25, 2).count == brute_force_K(build_graph(ctx25, 2), 4).count
    ctx13 = get_field(13)
    assert K4_thm1(ctx13, 3).count == brute_force_K(build_graph(ctx13, 3), 4).count


def test_k4_thm1_cap():
    with pytest.raises(SizeLimit):
        K4_thm1(get_field(137), 2)
    with pytest.raises(SizeLimit):
        K4_thm1(get_field(41), 5)


def test_k4_thm2_paper_cases():
    assert K4_thm2(get_field(127), 3).count == 0
    assert K4_thm2(get_field(457), 4).count == 0


def test_k4_thm2_matches_thm1_at_k5():
    ctx = get_field(61)
    lifted_cap = K4_thm1(ctx, 5, q_cap=61, k_cap=5)
    assert K4_thm2(ctx, 5).count == lifted_cap.count
    assert brute_force_K(build_graph(ctx, 5), 4).count == lifted_cap.count


def test_k4_corollary_values():
    ctx17 = get_field(17)
    assert K4_corollary(ctx17, 2).count == 0
    assert K4_corollary(get_field(127), 3).count == 0
    assert K4_corollary(get_field(457), 4).count == 0
    assert K4_corollary(get_field(29), 2).count == 203


def test_exact_division_guard():
    with pytest.raises(NonIntegerResult):
        _exact_div(7, 3, "guard")
    assert _exact_div(12, 3, "guard") == 4


def test_clique_count_dispatch():
    ctx = get_field(17)
    for method in ("auto", "naive", "subgraph", "thm2", "corollary", "thm1"):
        assert clique_count(ctx, 2, 4, method=method).count == 0
    for method in ("auto", "thm", "naive", "corollary", "subgraph"):
        assert clique_count(ctx, 2, 3, method=method).count == 17 * 16 * 12 // 48
    res = clique_count(ctx, 2, 4)
    assert isinstance(res, CliqueCountResult)
    assert res.to_json()["count"] == "0"


def test_subgraph_props_grid():
    res = check_subgraph_props(q_limit=61)
    assert res.passed, res.detail


def test_clique_recursions_full_grid():
    res = check_clique_recursions(q_limit=200, ks=(2, 3, 4))
    assert res.passed, res.detail


def test_strong_regularity():
    res = check_strong_regularity(q_limit=101)
    assert res.passed, res.detail
