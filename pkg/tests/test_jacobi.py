"""Jacobi sums, their aggregates, and the quadratic-form normalizations."""

import random
from math import isqrt

import pytest

from gpaley.characters import MultChar, canonical_char, trivial_char
from gpaley.cyclotomic import CycInt
from gpaley.errors import NoRepresentation, NotRational
from gpaley.jacobi import (EISENSTEIN, J0, JJ0, TWO_SQUARES, TWO_TIMES_SQUARE,
                           R_k, S_k, binom_symbol_scaled, jacobi_sum,
                           solve_quadform)
from gpaley.verify import check_aggregate_identities, check_quadform_lemmas
from helpers import get_field, paley_pairs


def brute_jacobi_complex(ctx, ma, mb):
    """Independent float evaluation of J straight from the definition."""
    import cmath
    q = ctx.q
    total = 0j
    for a in range(q):
        b = ctx.sub(1, a)
        if a == 0 or b == 0:
            continue
        total += cmath.exp(2j * cmath.pi * ((ma * ctx.dlog(a) + mb * ctx.dlog(b))
                                            % (q - 1)) / (q - 1))
    return total


def test_jacobi_trivial_pair():
    ctx = get_field(13)
    eps = trivial_char(ctx)
    assert jacobi_sum(eps, eps).as_integer() == 11


def test_jacobi_with_trivial_left():
    for q in (13, 16, 17, 49):
        ctx = get_field(q)
        eps = trivial_char(ctx)
        for m in range(1, q - 1):
            chi = MultChar(ctx, m)
            assert jacobi_sum(eps, chi, conductor=chi.order).as_integer() == -1


def test_jacobi_conjugate_pair_value():
    rng = random.Random(3)
    for q in (13, 17, 25, 41):
        ctx = get_field(q)
        for _ in range(12):
            chi = MultChar(ctx, rng.randrange(1, q - 1))
            val = jacobi_sum(chi, chi.conj(), conductor=chi.order)
            assert val.as_integer() == -chi.sign_at_minus_one()


def test_jacobi_matches_float_oracle():
    rng = random.Random(5)
    for q in (13, 16, 27, 37):
        ctx = get_field(q)
        for _ in range(10):
            a, b = rng.randrange(q - 1), rng.randrange(q - 1)
            A, B = MultChar(ctx, a), MultChar(ctx, b)
            exact = jacobi_sum(A, B, conductor=q - 1).complex_value()
            assert abs(exact - brute_jacobi_complex(ctx, a, b)) < 1e-8


def test_order3_pair_sum_q13():
    ctx = get_field(13)
    chi3 = canonical_char(ctx, 3)
    val = (jacobi_sum(chi3, chi3, conductor=3)
           + jacobi_sum(chi3.conj(), chi3.conj(), conductor=3)).as_integer()
    assert val == -5
    assert 4 * 13 == (-5) ** 2 + 3 * 3 ** 2
    assert -5 % 3 == 1 and 3 % 3 == 0


def test_binom_symbol():
    ctx = get_field(13)
    eps = trivial_char(ctx)
    assert binom_symbol_scaled(eps, eps).as_integer() == 11
    rng = random.Random(8)
    for _ in range(15):
        chi = MultChar(ctx, rng.randrange(1, 12))
        assert binom_symbol_scaled(chi, chi, conductor=12).as_integer() == -1
        A, B = MultChar(ctx, rng.randrange(12)), MultChar(ctx, rng.randrange(12))
        lhs = binom_symbol_scaled(A, B, conductor=12).conj()
        rhs = binom_symbol_scaled(A.conj(), B.conj(), conductor=12)
        assert lhs == rhs


def test_R_and_S_vanish_for_k2():
    for _, q in paley_pairs(200, ks=(2,)):
        ctx = get_field(q)
        assert R_k(ctx, 2) == 0
        assert S_k(ctx, 2) == 0


def test_S_vanishes_for_k3():
    for _, q in paley_pairs(200, ks=(3,)):
        assert S_k(get_field(q), 3) == 0


def test_R3_at_127():
    assert R_k(get_field(127), 3) == -20


def test_R4_S4_at_457():
    ctx = get_field(457)
    x = solve_quadform(TWO_SQUARES, ctx).a
    assert x == 21
    assert R_k(ctx, 4) == -126 == -6 * x
    assert S_k(ctx, 4) == 2678 == 4 * x * x + 2 * 457


def test_R4_reduces_to_order4_trace():
    for _, q in paley_pairs(300, ks=(4,)):
        ctx = get_field(q)
        chi4 = canonical_char(ctx, 4)
        trace = (jacobi_sum(chi4, chi4, conductor=4)
                 + jacobi_sum(chi4.conj(), chi4.conj(), conductor=4)).as_integer()
        assert R_k(ctx, 4) == 3 * trace


def test_J0_JJ0_values_q13():
    ctx = get_field(13)
    assert J0(ctx, 2) == 8 == R_k(ctx, 2) + 13 - 6 + 1
    assert JJ0(ctx, 2) == 104


def test_J0_divisible_by_k_squared():
    for k, q in paley_pairs(200):
        assert J0(get_field(q), k) % (k * k) == 0


def test_aggregates_independent_of_order_k_character_choice():
    from math import gcd
    for k, q in paley_pairs(61):
        ctx = get_field(q)
        reference = R_k(ctx, k)
        for j in range(1, k):
            if gcd(j, k) != 1:
                continue
            chi = MultChar(ctx, j * (q - 1) // k)
            assert chi.order == k
            total = CycInt.zero(k)
            for s in range(1, k):
                for t in range(1, k):
                    if (s + t) % k:
                        total = total + jacobi_sum(chi ** s, chi ** t, conductor=k)
            assert total.as_integer() == reference


def test_aggregate_identities_grid():
    res = check_aggregate_identities(q_limit=200)
    assert res.passed, res.detail


def test_quadform_lemmas_all_branches():
    res = check_quadform_lemmas(q_limit=500)
    assert res.passed, res.detail


def brute_two_squares(q):
    """All (x, y) with q = x^2 + y^2, x odd normalized to 1 mod 4, y >= 0 even."""
    out = set()
    for x in range(1, isqrt(q) + 1):
        y2 = q - x * x
        y = isqrt(y2)
        if y * y == y2 and x % 2 == 1 and y % 2 == 0:
            out.add((x if x % 4 == 1 else -x, y))
    return out


def test_two_squares_normalization():
    cases = {457: (21, 4), 13: (-3, 2), 17: (1, 4), 25: (-3, 4), 41: (5, 4), 9: (-3, 0)}
    for q, (x, y) in cases.items():
        rep = solve_quadform(TWO_SQUARES, get_field(q))
        assert (rep.a, rep.b) == (x, y)
        assert rep.a ** 2 + rep.b ** 2 == q
        assert rep.a % 4 == 1
        assert (x, y) in brute_two_squares(q)


def test_two_squares_inert_branch():
    # p = 3 mod 4 forces x = (-p)^(r/2), y = 0
    for q, expect in ((9, -3), (49, -7), (81, 9)):
        rep = solve_quadform(TWO_SQUARES, get_field(q))
        assert (rep.a, rep.b) == (expect, 0)
        assert rep.inert


def test_eisenstein_normalization():
    cases = {127: (-20, 6), 7: (1, 3), 13: (-5, 3), 16: (-8, 0), 64: (16, 0), 4: (4, 0)}
    for q, (c, d) in cases.items():
        rep = solve_quadform(EISENSTEIN, get_field(q))
        assert (rep.a, rep.b) == (c, d)
        assert rep.a ** 2 + 3 * rep.b ** 2 == 4 * q
        assert rep.a % 3 == 1 and rep.b % 3 == 0


def test_two_times_square_normalization():
    cases = {457: (-13, 12), 17: (3, 2), 41: (3, 4), 25: (-5, 0), 49: (7, 0), 9: (-1, 2)}
    for q, (u, v) in cases.items():
        rep = solve_quadform(TWO_TIMES_SQUARE, get_field(q))
        assert (rep.a, rep.b) == (u, v)
        assert rep.a ** 2 + 2 * rep.b ** 2 == q
        assert rep.a % 4 == 3


def test_quadform_preconditions():
    with pytest.raises(NoRepresentation):
        solve_quadform(TWO_SQUARES, get_field(7))
    with pytest.raises(NoRepresentation):
        solve_quadform(EISENSTEIN, get_field(5))
    with pytest.raises(NoRepresentation):
        solve_quadform(TWO_TIMES_SQUARE, get_field(13))


def test_not_rational_guard():
    ctx = get_field(13)
    chi = canonical_char(ctx, 3)
    with pytest.raises(NotRational):
        jacobi_sum(chi, chi, conductor=3).as_integer()
