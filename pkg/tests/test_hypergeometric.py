"""Scaled hypergeometric evaluation, reductions, and transformations."""

import random

import pytest

from gpaley.characters import MultChar, canonical_char, trivial_char
from gpaley.cyclotomic import CycInt
from gpaley.errors import ShapeMismatch
from gpaley.hypergeometric import (check_reduction, check_transformation,
                                   f21_definitional_numeric, f21_scaled,
                                   f32_definitional_numeric, f32_full_grid_sum,
                                   f32_indexed, f32_scaled,
                                   index_map_for_transformation)
from gpaley.jacobi import solve_quadform
from gpaley.verify import (check_exact_vs_numeric, check_orbit_invariance,
                           check_reductions, check_transformations)
from helpers import get_field, paley_pairs


def test_f21_trivial_parameters():
    ctx = get_field(13)
    eps = trivial_char(ctx)
    val = f21_scaled(eps, eps, eps, lam=1)
    assert val.scale_power == 1
    assert val.value.as_integer() == 11


def test_lambda_zero_annihilates():
    ctx = get_field(13)
    chi = canonical_char(ctx, 3)
    eps = trivial_char(ctx)
    assert f21_scaled(chi, chi, eps, lam=0).value.is_zero()
    assert f32_scaled(chi, chi, chi, eps, eps, lam=0).value.is_zero()
    assert f32_indexed(ctx, 3, (1, 1, 2, 0, 0), lam=0).value.is_zero()


def test_f21_against_definitional_numeric():
    ctx = get_field(13)
    phi = canonical_char(ctx, 2)
    eps = trivial_char(ctx)
    exact = f21_scaled(phi, phi, eps, lam=1).value.complex_value()
    numeric = 13 * f21_definitional_numeric(phi, phi, eps, lam=1)
    assert abs(exact - numeric) < 1e-9


def test_paper_search_values():
    ctx = get_field(127)
    assert f32_indexed(ctx, 3, (1, 1, 2, 0, 0)).value.as_integer() == -205
    ctx457 = get_field(457)
    assert f32_indexed(ctx457, 4, (1, 1, 3, 0, 0)).value.as_integer() == 290
    assert f32_indexed(ctx457, 4, (1, 2, 2, 0, 0)).value.as_integer() == -590


def test_quadratic_character_value_is_quadform_expression():
    # q = 1 mod 4: q^2 * 3F2(phi,phi,phi; eps,eps | 1) = 4x^2 - 2q
    for _, q in paley_pairs(120, ks=(2,)):
        ctx = get_field(q)
        x = solve_quadform("TwoSquares", ctx).a
        assert f32_indexed(ctx, 2, (1, 1, 1, 0, 0)).value.as_integer() == 4 * x * x - 2 * q
    assert f32_indexed(get_field(13), 2, (1, 1, 1, 0, 0)).value.as_integer() == 10


def test_histogram_path_matches_direct_sum():
    rng = random.Random(21)
    for k, q in ((2, 13), (3, 13), (3, 16), (4, 17), (5, 41), (6, 25)):
        ctx = get_field(q)
        chi = canonical_char(ctx, k)
        for _ in range(8):
            t = tuple(rng.randrange(k) for _ in range(5))
            fast = f32_indexed(ctx, k, t).value
            slow = f32_scaled(*(chi ** ti for ti in t), lam=1, conductor=k).value
            assert fast == slow


def test_scale_powers():
    ctx = get_field(13)
    eps = trivial_char(ctx)
    assert f21_scaled(eps, eps, eps, 1).scale_power == 1
    assert f32_scaled(eps, eps, eps, eps, eps, 1).scale_power == 2


def test_full_grid_sum_matches_termwise():
    for k, q in ((2, 13), (3, 13)):
        ctx = get_field(q)
        total = CycInt.zero(k)
        for t1 in range(k):
            for t2 in range(k):
                for t3 in range(k):
                    for t4 in range(k):
                        for t5 in range(k):
                            total = total + f32_indexed(ctx, k, (t1, t2, t3, t4, t5)).value
        assert f32_full_grid_sum(ctx, k) == total


def test_reduction_case1_q13_k3():
    rng = random.Random(31)
    ctx = get_field(13)
    chi = canonical_char(ctx, 3)
    eps = trivial_char(ctx)
    for _ in range(10):
        params = (eps,) + tuple(chi ** rng.randrange(3) for _ in range(4))
        assert check_reduction(1, params)


def test_reduction_case6_q13_k4():
    rng = random.Random(32)
    ctx = get_field(13)
    chi = canonical_char(ctx, 4)
    for _ in range(10):
        A, B, C, D = (chi ** rng.randrange(4) for _ in range(4))
        E = A * B * C * D.conj()
        assert check_reduction(6, (A, B, C, D, E))


def test_reduction_2f1_q17():
    rng = random.Random(33)
    ctx = get_field(17)
    for _ in range(10):
        params = tuple(MultChar(ctx, rng.randrange(16)) for _ in range(3))
        assert check_reduction("2F1", params)


def test_reduction_shape_mismatch():
    ctx = get_field(13)
    chi = canonical_char(ctx, 3)
    eps = trivial_char(ctx)
    with pytest.raises(ShapeMismatch):
        check_reduction(1, (chi, eps, eps, eps, eps))
    with pytest.raises(ShapeMismatch):
        check_reduction(3, (chi, eps, eps, chi ** 2, eps))


def test_transformation_t1_displayed_case():
    ctx = get_field(13)
    chi = canonical_char(ctx, 3)
    t = (1, 2, 1, 2, 0)
    params = tuple(chi ** ti for ti in t)
    assert check_transformation(1, params)
    image = index_map_for_transformation(1, t, 3)
    assert f32_indexed(ctx, 3, t).value == f32_indexed(ctx, 3, image).value


def test_transformation_t7_q25_k2():
    rng = random.Random(34)
    ctx = get_field(25)
    chi = canonical_char(ctx, 2)
    for _ in range(8):
        params = tuple(chi ** rng.randrange(2) for _ in range(5))
        assert check_transformation(7, params)


def test_column_permutation_q17_k4():
    rng = random.Random(35)
    ctx = get_field(17)
    chi = canonical_char(ctx, 4)
    for _ in range(8):
        params = tuple(chi ** rng.randrange(4) for _ in range(5))
        assert check_transformation("perm", params)


def test_reduction_sweeps():
    res = check_reductions(cases=60)
    assert res.passed, res.detail


def test_transformation_sweeps():
    res = check_transformations(cases=60)
    assert res.passed, res.detail


def test_orbit_invariance():
    res = check_orbit_invariance()
    assert res.passed, res.detail


def test_exact_matches_definitional_numeric_sweep():
    res = check_exact_vs_numeric()
    assert res.passed, res.detail


def test_definitional_numeric_3f2_spot():
    ctx = get_field(13)
    chi3 = canonical_char(ctx, 3)
    eps = trivial_char(ctx)
    exact = f32_scaled(chi3, chi3, chi3.conj(), eps, eps, 1, conductor=3)
    numeric = 169 * f32_definitional_numeric(chi3, chi3, chi3.conj(), eps, eps, 1)
    assert abs(exact.value.complex_value() - numeric) < 1e-8
