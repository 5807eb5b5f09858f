"""Field construction, table integrity, and k-th power residue queries."""

import random

import pytest

from gpaley.errors import CompositeP, InvalidCongruence, SizeLimit, ZeroInput
from gpaley.finite_field import (build_field, is_kth_power, is_prime,
                                 kth_power_residues, split_prime_power,
                                 validate_paley_params)
from helpers import get_field, paley_pairs


def brute_force_order(q, mul, g):
    x, n = g, 1
    while x != 1:
        x = mul(x, g)
        n += 1
    return n


def test_smallest_primitive_root_13():
    ctx = get_field(13)
    assert ctx.q == 13
    # oracle: exhaustive order check over Z_13
    orders = {g: brute_force_order(13, lambda a, b: a * b % 13, g) for g in range(2, 13)}
    smallest = min(g for g, n in orders.items() if n == 12)
    assert smallest == 2
    assert ctx.primitive_index == 2


def test_smallest_primitive_root_5():
    ctx = get_field(5)
    assert ctx.primitive_index == 2
    assert brute_force_order(5, lambda a, b: a * b % 5, 2) == 4


def test_gf16_modulus_is_first_irreducible():
    ctx = get_field(16)
    assert ctx.modulus == (1, 1, 0, 0, 1)   # x^4 + x + 1

    # oracle: scan degree-4 polynomials over Z_2 in base-2 value order and
    # find the first with no nonconstant divisor of degree <= 2
    def poly_mod(num, den):
        while len(num) >= len(den):
            if num[-1]:
                shift = len(num) - len(den)
                num = [(a - b * num[-1]) % 2 for a, b in
                       zip(num, [0] * shift + list(den))]
            num = num[:-1]
        return num

    def divides(den, num):
        return not any(poly_mod(list(num), list(den)))

    divisors = []
    for deg in (1, 2):
        for m in range(2 ** deg):
            divisors.append(tuple((m >> i) & 1 for i in range(deg)) + (1,))
    first = None
    for m in range(16):
        f = tuple((m >> i) & 1 for i in range(4)) + (1,)
        if not any(divides(d, f) for d in divisors):
            first = f
            break
    assert first == ctx.modulus


def test_composite_p_rejected():
    with pytest.raises(CompositeP):
        build_field(6, 1)
    with pytest.raises(CompositeP):
        build_field(1, 2)


def test_size_limit():
    with pytest.raises(SizeLimit):
        build_field(13, 1, size_limit=10)


def test_validate_paley_params():
    validate_paley_params(2, get_field(13))
    validate_paley_params(3, get_field(16))
    with pytest.raises(InvalidCongruence):
        validate_paley_params(4, get_field(13))


def test_dlog_via_repeated_multiplication():
    ctx = get_field(13)
    x, j = 1, 0
    seen = {}
    while j < 12:
        seen[x] = j
        x = x * 2 % 13
        j += 1
    assert seen[3] == 4
    assert ctx.dlog(3) == 4


def test_field_axioms_random():
    rng = random.Random(99)
    for q in (13, 16, 27, 25, 49):
        ctx = get_field(q)
        for _ in range(50):
            a = rng.randrange(1, q)
            b = rng.randrange(q)
            c = rng.randrange(q)
            assert ctx.mul(a, ctx.inv(a)) == 1
            assert ctx.add(a, ctx.neg(a)) == 0
            assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
            assert ctx.pow_element(a, q - 1) == 1


def test_frobenius_additivity_prime_power():
    for q in (16, 27, 25):
        ctx = get_field(q)
        p = ctx.p
        for a in range(q):
            for b in range(q):
                lhs = ctx.pow_element(ctx.add(a, b), p)
                rhs = ctx.add(ctx.pow_element(a, p), ctx.pow_element(b, p))
                assert lhs == rhs


def test_neg_one_prime_field():
    assert get_field(13).neg(1) == 12


def test_square_residues_13():
    squares = sorted({a * a % 13 for a in range(1, 13)})
    ctx = get_field(13)
    assert kth_power_residues(ctx, 2) == squares == [1, 3, 4, 9, 10, 12]
    for a in range(1, 13):
        assert is_kth_power(ctx, a, 2) == (a in squares)


def test_minus_one_is_kth_power_under_valid_params():
    for k, q in paley_pairs(200):
        ctx = get_field(q)
        assert is_kth_power(ctx, ctx.neg(1), k)


def test_one_is_always_kth_power():
    for k, q in paley_pairs(100):
        assert is_kth_power(get_field(q), 1, k)


def test_residue_subgroup_size():
    for k, q in paley_pairs(200):
        assert len(kth_power_residues(get_field(q), k)) == (q - 1) // k


def test_exp_log_roundtrip():
    for q in (13, 16, 17, 25, 27, 49, 61, 81, 121, 127, 128):
        ctx = get_field(q)
        assert sorted(ctx.exp_table) == list(range(1, q))
        for j in range(q - 1):
            assert ctx.log_table[ctx.exp_table[j]] == j


def test_zero_input_errors():
    ctx = get_field(13)
    with pytest.raises(ZeroInput):
        ctx.inv(0)
    with pytest.raises(ZeroInput):
        ctx.dlog(0)
    with pytest.raises(ZeroInput):
        is_kth_power(ctx, 0, 2)


def test_alternate_generator_differs_but_consistent():
    for q in (13, 16, 41):
        base, alt = get_field(q), get_field(q, alt=True)
        assert base.primitive_index != alt.primitive_index
        assert sorted(alt.exp_table) == list(range(1, q))
        for j in range(q - 1):
            assert alt.log_table[alt.exp_table[j]] == j


def test_split_prime_power():
    assert split_prime_power(16) == (2, 4)
    assert split_prime_power(127) == (127, 1)
    with pytest.raises(ValueError):
        split_prime_power(12)


def test_is_prime_small():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23]
    assert [n for n in range(2, 25) if is_prime(n)] == primes


def test_vectorized_subtraction_matches_scalar():
    import numpy as np
    for q in (13, 16, 27):
        ctx = get_field(q)
        xs = np.arange(q, dtype=np.int64)
        table = ctx.sub_outer(xs, xs)
        for a in range(q):
            for b in range(q):
                assert table[a, b] == ctx.sub(a, b)
