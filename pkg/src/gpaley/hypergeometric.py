"""Exact 2F1 and 3F2 finite field hypergeometric functions.

Values are always carried with their q-power scaling (q * 2F1, q^2 * 3F2):
the scaled sums are cyclotomic integers, so the whole pipeline stays exact.
Each evaluator walks the defining character double sum, histograms the
root-of-unity exponents, and folds the histogram once; terms with any zero
argument vanish because every character, the trivial one included, is zero
at zero.

The reduction and transformation checkers compare both sides of the known
identities after clearing all denominators by powers of q; they return a
plain bool so sweeps can be run at scale.

A floating-point evaluation of the underlying sum over all q-1 characters is
included purely as a cross-validation oracle; results never flow from it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .characters import MultChar, canonical_char
from .cyclotomic import CycInt
from .errors import ShapeMismatch
from .finite_field import FieldContext
from .jacobi import binom_symbol_scaled

HIST_K_CAP = 8   # conductors above this skip the cached lambda=1 histogram


@dataclass(frozen=True)
class ScaledHypValue:
    value: CycInt
    scale_power: int      # stored value equals q**scale_power times the function


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _conductor(chars) -> int:
    c = 1
    for ch in chars:
        c = _lcm(c, ch.order)
    return c


def _same_ctx(chars) -> FieldContext:
    ctx = chars[0].ctx
    assert all(ch.ctx is ctx for ch in chars)
    return ctx


def f21_scaled(A: MultChar, B: MultChar, C: MultChar, lam: int,
               conductor: int | None = None) -> ScaledHypValue:
    """q * 2F1(A, B; C | lam) = sum over b of AC^-1(b) B^-1C(1-b) A^-1(b-lam)."""
    ctx = _same_ctx((A, B, C))
    c = conductor if conductor is not None else _conductor((A, B, C))
    if lam == 0:
        return ScaledHypValue(CycInt.zero(c), 1)
    x1 = (A * C.conj()).exponent_in(c)
    x2 = (B.conj() * C).exponent_in(c)
    x3 = A.conj().exponent_in(c)
    q, one = ctx.q, 1
    bs = np.arange(q, dtype=np.int64)
    omb = ctx.sub_vec(one, bs)
    bml = ctx.sub_outer(bs, np.array([lam], dtype=np.int64))[:, 0]
    valid = (bs != 0) & (omb != 0) & (bml != 0)
    log = ctx.np_log
    e = (x1 * log[bs] + x2 * log[omb] + x3 * log[bml]) % c
    counts = np.bincount(e[valid], minlength=c)
    return ScaledHypValue(CycInt.from_zeta_counts(c, counts.tolist()), 1)


def f32_scaled(A: MultChar, B: MultChar, C: MultChar, D: MultChar, E: MultChar,
               lam: int, conductor: int | None = None) -> ScaledHypValue:
    """q^2 * 3F2(A, B, C; D, E | lam) over the full (a, b) double sum."""
    ctx = _same_ctx((A, B, C, D, E))
    c = conductor if conductor is not None else _conductor((A, B, C, D, E))
    if lam == 0:
        return ScaledHypValue(CycInt.zero(c), 2)
    x1 = (A * E.conj()).exponent_in(c)
    x2 = (C.conj() * E).exponent_in(c)
    x3 = B.exponent_in(c)
    x4 = (B.conj() * D).exponent_in(c)
    x5 = A.conj().exponent_in(c)
    q, one = ctx.q, 1
    log = ctx.np_log
    bs = np.arange(q, dtype=np.int64)
    bm1 = ctx.sub_outer(bs, np.array([one], dtype=np.int64))[:, 0]
    lam_b = ctx.mul_vec(lam, bs)
    b_valid = (bs != 0) & (bm1 != 0)
    e_b = x3 * log[bs] + x4 * log[bm1]
    counts = np.zeros(c, dtype=np.int64)
    for a in range(1, q):
        oma = ctx.sub(one, a)
        if oma == 0:
            continue
        base = x1 * ctx.log_table[a] + x2 * ctx.log_table[oma]
        amlb = ctx.sub_vec(a, lam_b)
        valid = b_valid & (amlb != 0)
        e = (base + e_b + x5 * log[amlb]) % c
        counts += np.bincount(e[valid], minlength=c)
    return ScaledHypValue(CycInt.from_zeta_counts(c, counts.tolist()), 2)


# ---------------------------------------------------------------------------
# indexed evaluation: characters are powers of the canonical order-k character
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _index_vectors(k: int) -> np.ndarray:
    """All of (Z_k)^5 in lexicographic order, one row each."""
    grid = np.indices((k,) * 5).reshape(5, -1).T
    return np.ascontiguousarray(grid.astype(np.int64))


def residue_histogram(ctx: FieldContext, k: int) -> np.ndarray:
    """Counts of the residue pattern (rho(a), rho(1-a), rho(b), rho(b-1),
    rho(a-b)) over valid pairs, rho = dlog mod k.  One O(q^2) pass feeds
    every lambda=1 indexed 3F2 at this (q, k)."""
    key = ("f32hist", k)
    if key in ctx._caches:
        return ctx._caches[key]
    q, one = ctx.q, 1
    rho = ctx.np_log % k
    bs = np.arange(q, dtype=np.int64)
    bm1 = ctx.sub_outer(bs, np.array([one], dtype=np.int64))[:, 0]
    b_valid = (bs != 0) & (bm1 != 0)
    i34 = rho[bs] * k + rho[bm1]
    hist = np.zeros(k ** 5, dtype=np.int64)
    parts = []
    for a in range(1, q):
        oma = ctx.sub(one, a)
        if oma == 0:
            continue
        head = (rho[a] * k + rho[oma]) * k * k
        amb = ctx.sub_vec(a, bs)
        valid = b_valid & (amb != 0)
        flat = (head + i34) * k + rho[amb]
        parts.append(flat[valid])
        if len(parts) >= 256:        # bound peak memory on large fields
            hist += np.bincount(np.concatenate(parts), minlength=k ** 5)
            parts = []
    if parts:
        hist += np.bincount(np.concatenate(parts), minlength=k ** 5)
    ctx._caches[key] = hist
    return hist


def _coef_vector(k: int, t) -> np.ndarray:
    t1, t2, t3, t4, t5 = t
    return np.array([(t1 - t5) % k, (t5 - t3) % k, t2 % k,
                     (t4 - t2) % k, (-t1) % k], dtype=np.int64)


def _hist_value(ctx: FieldContext, k: int, t) -> CycInt:
    hist = residue_histogram(ctx, k)
    e = (_index_vectors(k) @ _coef_vector(k, t)) % k
    counts = [int(hist[e == v].sum()) for v in range(k)]
    return CycInt.from_zeta_counts(k, counts)


def f32_indexed(ctx: FieldContext, k: int, t, lam: int | None = None) -> ScaledHypValue:
    """q^2 * 3F2 at the character powers chi_k^(t1..t5), lambda = 1 unless given."""
    if (lam is None or lam == 1) and k <= HIST_K_CAP:
        return ScaledHypValue(_hist_value(ctx, k, t), 2)
    chi = canonical_char(ctx, k)
    chars = [chi ** ti for ti in t]
    return f32_scaled(*chars, lam=1 if lam is None else lam, conductor=k)


def f32_full_grid_sum(ctx: FieldContext, k: int) -> CycInt:
    """Sum of q^2 * 3F2(t | 1) over every t in (Z_k)^5."""
    hist = residue_histogram(ctx, k)
    vecs = _index_vectors(k)
    counts = [0] * k
    for t in vecs:
        e = (vecs @ _coef_vector(k, t)) % k
        for v in range(k):
            counts[v] += int(hist[e == v].sum())
    return CycInt.from_zeta_counts(k, counts)


# ---------------------------------------------------------------------------
# reduction formulae (identities at lambda = 1, denominators cleared by q^2)
# ---------------------------------------------------------------------------

def _binom_scaled_in(A: MultChar, B: MultChar, c: int) -> CycInt:
    return binom_symbol_scaled(A, B, conductor=c)


def check_reduction(case, params) -> bool:
    """Verify one reduction identity exactly.

    case 1: first top character trivial        case 4: D = B
    case 2: second top character trivial       case 5: E = B
    case 3: D = A                              case 6: E = ABC/D
    case "2F1": the 2F1(...|1) evaluation, params = (A, B, C)
    """
    if case == "2F1":
        A, B, C = params
        c = _conductor(params)
        lhs = f21_scaled(A, B, C, lam=1, conductor=c).value
        rhs = A.sign_at_minus_one() * _binom_scaled_in(B, A.conj() * C, c)
        return lhs == rhs

    A, B, C, D, E = params
    c = _conductor(params)
    lhs = f32_scaled(A, B, C, D, E, lam=1, conductor=c).value

    if case == 1:
        if not A.is_trivial:
            raise ShapeMismatch("case 1 needs a trivial first top character")
        rhs = (-f21_scaled(B * D.conj(), C * D.conj(), E * D.conj(), 1, conductor=c).value
               + _binom_scaled_in(B, D, c) * _binom_scaled_in(C, E, c))
    elif case == 2:
        if not B.is_trivial:
            raise ShapeMismatch("case 2 needs a trivial second top character")
        rhs = (A.sign_at_minus_one()
               * _binom_scaled_in(D, A, c)
               * f21_scaled(A * D.conj(), C * D.conj(), E * D.conj(), 1, conductor=c).value
               - D.sign_at_minus_one() * _binom_scaled_in(C, E, c))
    elif case == 3:
        if D.m != A.m:
            raise ShapeMismatch("case 3 needs D = A")
        rhs = (_binom_scaled_in(B, A, c) * f21_scaled(B, C, E, 1, conductor=c).value
               - A.conj().sign_at_minus_one()
               * _binom_scaled_in(C * A.conj(), E * A.conj(), c))
    elif case == 4:
        if D.m != B.m:
            raise ShapeMismatch("case 4 needs D = B")
        rhs = (-f21_scaled(A, C, E, 1, conductor=c).value
               + _binom_scaled_in(A * B.conj(), B.conj(), c)
               * _binom_scaled_in(C * B.conj(), E * B.conj(), c))
    elif case == 5:
        if E.m != B.m:
            raise ShapeMismatch("case 5 needs E = B")
        rhs = (_binom_scaled_in(C * D.conj(), B * D.conj(), c)
               * f21_scaled(A, C, D, 1, conductor=c).value
               - (B * D).sign_at_minus_one() * _binom_scaled_in(A * B.conj(), B.conj(), c))
    elif case == 6:
        if E.m != (A * B * C * D.conj()).m:
            raise ShapeMismatch("case 6 needs E = ABC/D")
        rhs = ((B * C).sign_at_minus_one()
               * _binom_scaled_in(C, D * A.conj(), c)
               * _binom_scaled_in(B, D * C.conj(), c)
               - (B * D).sign_at_minus_one() * _binom_scaled_in(D * B.conj(), A, c))
    else:
        raise ValueError(f"unknown reduction case {case!r}")
    return lhs == rhs


# ---------------------------------------------------------------------------
# transformation formulae (lambda = 1)
# ---------------------------------------------------------------------------

def _transformed_params(case, A, B, C, D, E):
    cj = MultChar.conj
    if case == 1:
        return 1, (B * cj(D), A * cj(D), C * cj(D), cj(D), E * cj(D))
    if case == 2:
        return (A * B * C * D * E).sign_at_minus_one(), \
            (A, A * cj(D), A * cj(E), A * cj(B), A * cj(C))
    if case == 3:
        return (A * B * C * D * E).sign_at_minus_one(), \
            (B * cj(D), B, B * cj(E), B * cj(A), B * cj(C))
    if case == 4:
        return (A * E).sign_at_minus_one(), (A, B, cj(C) * E, A * B * cj(D), E)
    if case == 5:
        return (A * D).sign_at_minus_one(), (A, D * cj(B), C, D, A * C * cj(E))
    if case == 6:
        return B.sign_at_minus_one(), (cj(A) * D, B, C, D, B * C * cj(E))
    if case == 7:
        return (A * B).sign_at_minus_one(), \
            (cj(A) * D, cj(B) * D, C, D, cj(A) * cj(B) * D * E)
    if case == "perm":
        return 1, (A, C, B, E, D)
    raise ValueError(f"unknown transformation case {case!r}")


def check_transformation(case, params) -> bool:
    A, B, C, D, E = params
    sign, new = _transformed_params(case, A, B, C, D, E)
    c = _conductor(params)
    lhs = f32_scaled(A, B, C, D, E, lam=1, conductor=c).value
    rhs = sign * f32_scaled(*new, lam=1, conductor=c).value
    return lhs == rhs


def index_map_for_transformation(case, t, k):
    """The affine action on index vectors induced by each transformation."""
    t1, t2, t3, t4, t5 = t
    maps = {
        1: (t2 - t4, t1 - t4, t3 - t4, -t4, t5 - t4),
        2: (t1, t1 - t4, t1 - t5, t1 - t2, t1 - t3),
        3: (t2 - t4, t2, t2 - t5, t2 - t1, t2 - t3),
        4: (t1, t2, t5 - t3, t1 + t2 - t4, t5),
        5: (t1, t4 - t2, t3, t4, t1 + t3 - t5),
        6: (t4 - t1, t2, t3, t4, t2 + t3 - t5),
        7: (t4 - t1, t4 - t2, t3, t4, t4 + t5 - t1 - t2),
    }
    return tuple(x % k for x in maps[case])


# ---------------------------------------------------------------------------
# floating-point oracle: the definitional sum over all q-1 characters
# ---------------------------------------------------------------------------

def _numeric_tables(ctx: FieldContext):
    if "numeric" not in ctx._caches:
        q = ctx.q
        roots = np.exp(2j * np.pi * np.arange(q - 1) / (q - 1))
        one = 1
        a_vals = np.array([a for a in range(2, q)], dtype=np.int64)  # skip 0, 1
        log_a = ctx.np_log[a_vals]
        log_1ma = ctx.np_log[np.array([ctx.sub(one, int(a)) for a in a_vals], dtype=np.int64)]
        ctx._caches["numeric"] = (roots, log_a, log_1ma, {})
    return ctx._caches["numeric"]


def _numeric_jacobi(ctx: FieldContext, ma: int, mb: int) -> complex:
    roots, log_a, log_1ma, memo = _numeric_tables(ctx)
    qm1 = ctx.q - 1
    key = (ma % qm1, mb % qm1)
    if key not in memo:
        e = (key[0] * log_a + key[1] * log_1ma) % qm1
        memo[key] = complex(roots[e].sum())
    return memo[key]


def _numeric_char(ctx: FieldContext, m: int, a: int) -> complex:
    if a == 0:
        return 0j
    roots = _numeric_tables(ctx)[0]
    return complex(roots[(m * ctx.dlog(a)) % (ctx.q - 1)])


def _numeric_binom(ctx: FieldContext, mx: int, my: int) -> complex:
    return _numeric_char(ctx, my, ctx.neg(1)) / ctx.q * _numeric_jacobi(ctx, mx, -my)


def f21_definitional_numeric(A: MultChar, B: MultChar, C: MultChar, lam: int) -> complex:
    """2F1 via the sum over all characters; float, oracle use only."""
    ctx = _same_ctx((A, B, C))
    if lam == 0:
        return 0j
    q = ctx.q
    total = 0j
    for m in range(q - 1):
        total += (_numeric_binom(ctx, A.m + m, m)
                  * _numeric_binom(ctx, B.m + m, C.m + m)
                  * _numeric_char(ctx, m, lam))
    return total * q / (q - 1)


def f32_definitional_numeric(A: MultChar, B: MultChar, C: MultChar,
                             D: MultChar, E: MultChar, lam: int) -> complex:
    ctx = _same_ctx((A, B, C, D, E))
    if lam == 0:
        return 0j
    q = ctx.q
    total = 0j
    for m in range(q - 1):
        total += (_numeric_binom(ctx, A.m + m, m)
                  * _numeric_binom(ctx, B.m + m, D.m + m)
                  * _numeric_binom(ctx, C.m + m, E.m + m)
                  * _numeric_char(ctx, m, lam))
    return total * q / (q - 1)
