"""Deterministic construction of GF(p^r) with full exp/log tables.

Elements are plain ints in [0, q): the base-p digit vector of the polynomial
representative packed into a single index (0 is the zero element, 1 is the
multiplicative identity).  All multiplicative structure goes through the
discrete-log tables, so arithmetic is O(1) after construction and every run
of the same (p, r) produces byte-identical tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from .errors import CompositeP, InvalidCongruence, SizeLimit, ZeroInput

DEFAULT_SIZE_LIMIT = 1 << 24


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (n stays below the size cap)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# dense polynomial helpers over Z_p (coefficient lists, low degree first)
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mul_mod(a: list[int], b: list[int], mod: list[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_rem(prod, mod, p)


def _poly_rem(a: list[int], mod: list[int], p: int) -> list[int]:
    a = a[:]
    deg_m = len(mod) - 1
    for i in range(len(a) - 1, deg_m - 1, -1):
        c = a[i] % p
        if c:
            for j in range(deg_m + 1):
                a[i - deg_m + j] = (a[i - deg_m + j] - c * mod[j]) % p
    del a[deg_m:]
    return _poly_trim(a)


def _poly_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    acc = _poly_rem(base[:], mod, p)
    while e:
        if e & 1:
            result = _poly_mul_mod(result, acc, mod, p)
        acc = _poly_mul_mod(acc, acc, mod, p)
        e >>= 1
    return result


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        inv_lead = pow(b[-1], p - 2, p) if p > 2 else b[-1]
        monic = [(c * inv_lead) % p for c in b]
        a, b = b, _poly_rem(a, monic, p)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    """Rabin test: x^(p^r) = x mod f and gcd(x^(p^(r/l)) - x, f) = 1."""
    r = len(f) - 1
    if r == 1:
        return True
    x = [0, 1]
    t = x
    powers = {}
    for j in range(1, r + 1):
        t = _poly_powmod(t, p, f, p)
        powers[j] = t
    top = powers[r][:]
    # x^(p^r) - x must vanish mod f
    while len(top) < 2:
        top.append(0)
    top[1] = (top[1] - 1) % p
    if _poly_trim(top):
        return False
    for ell in factorize(r):
        g = powers[r // ell][:]
        while len(g) < 2:
            g.append(0)
        g[1] = (g[1] - 1) % p
        g = _poly_trim(g)
        if not g:
            return False
        if len(_poly_gcd(f, g, p)) > 1:
            return False
    return True


def _smallest_irreducible(p: int, r: int) -> list[int]:
    """First monic degree-r irreducible when the lower coefficients are read
    as a base-p integer (so x^4+x+1 for p=2, r=4)."""
    for m in range(p ** r):
        coeffs = []
        v = m
        for _ in range(r):
            coeffs.append(v % p)
            v //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# field context
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class FieldContext:
    """Fully materialized GF(p^r).  Immutable after construction."""

    p: int
    r: int
    q: int
    modulus: tuple[int, ...]          # length r+1, monic, low degree first
    primitive_index: int
    exp_table: list[int] = field(repr=False)
    log_table: list[int] = field(repr=False)
    _caches: dict = field(default_factory=dict, repr=False)

    # -- element arithmetic ------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.r):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, digits: list[int]) -> int:
        out = 0
        for d in reversed(digits):
            out = out * self.p + d
        return out

    def add(self, a: int, b: int) -> int:
        if self.r == 1:
            return (a + b) % self.p
        da, db = self._digits(a), self._digits(b)
        return self._pack([(x + y) % self.p for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.r == 1:
            return (-a) % self.p
        return self._pack([(-x) % self.p for x in self._digits(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("inverse of zero")
        return self.exp_table[(-self.log_table[a]) % (self.q - 1)]

    def dlog(self, a: int) -> int:
        if a == 0:
            raise ZeroInput("discrete log of zero")
        return self.log_table[a]

    def pow_element(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e > 0 else 1
        return self.exp_table[(self.log_table[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Embed the rational integer n via the prime subfield."""
        return n % self.p

    # -- vectorized helpers (used by the graph and hypergeometric layers) ---

    @property
    def np_log(self) -> np.ndarray:
        """log table as int64 with -1 at index 0."""
        if "np_log" not in self._caches:
            full = np.array(self.log_table, dtype=np.int64)
            full[0] = -1
            self._caches["np_log"] = full
        return self._caches["np_log"]

    @property
    def np_exp(self) -> np.ndarray:
        if "np_exp" not in self._caches:
            self._caches["np_exp"] = np.array(self.exp_table, dtype=np.int64)
        return self._caches["np_exp"]

    @property
    def _digit_matrix(self) -> np.ndarray:
        if "digits" not in self._caches:
            idx = np.arange(self.q, dtype=np.int64)
            cols = []
            for _ in range(self.r):
                cols.append(idx % self.p)
                idx = idx // self.p
            self._caches["digits"] = np.stack(cols, axis=1)
        return self._caches["digits"]

    @property
    def _p_powers(self) -> np.ndarray:
        if "ppow" not in self._caches:
            self._caches["ppow"] = np.array(
                [self.p ** i for i in range(self.r)], dtype=np.int64
            )
        return self._caches["ppow"]

    def sub_vec(self, a: int, bs: np.ndarray) -> np.ndarray:
        """Indices of a - b for every b in bs."""
        if self.r == 1:
            return (a - bs) % self.p
        d = (self._digit_matrix[a] - self._digit_matrix[bs]) % self.p
        return d @ self._p_powers

    def sub_outer(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        """Matrix of x - y indices for x in xs, y in ys."""
        if self.r == 1:
            return (xs[:, None] - ys[None, :]) % self.p
        d = (self._digit_matrix[xs][:, None, :] - self._digit_matrix[ys][None, :, :]) % self.p
        return d @ self._p_powers

    def mul_vec(self, a: int, bs: np.ndarray) -> np.ndarray:
        """Indices of a * b for every b in bs (a nonzero; zeros in bs map to 0)."""
        if a == 0:
            return np.zeros(len(bs), dtype=np.int64)
        out = np.zeros(len(bs), dtype=np.int64)
        nz = bs != 0
        la = self.log_table[a]
        out[nz] = self.np_exp[(la + self.np_log[bs[nz]]) % (self.q - 1)]
        return out

    def record(self) -> dict:
        """Construction record embedded in every JSON output."""
        return {
            "p": self.p,
            "r": self.r,
            "q": self.q,
            "modulus": list(self.modulus),
            "primitive": self.primitive_index,
        }


def _raw_mul(a: int, b: int, ctx_p: int, ctx_r: int, modulus: list[int]) -> int:
    """Table-free multiplication used while bootstrapping the tables."""
    if ctx_r == 1:
        return (a * b) % ctx_p
    da = []
    for _ in range(ctx_r):
        da.append(a % ctx_p)
        a //= ctx_p
    db = []
    for _ in range(ctx_r):
        db.append(b % ctx_p)
        b //= ctx_p
    prod = _poly_mul_mod(da, db, modulus, ctx_p)
    out = 0
    for d in reversed(range(ctx_r)):
        out = out * ctx_p + (prod[d] if d < len(prod) else 0)
    return out


def _element_order_is_maximal(g: int, p: int, r: int, q: int,
                              modulus: list[int], qm1_primes: list[int]) -> bool:
    for ell in qm1_primes:
        e = (q - 1) // ell
        acc, base = 1, g
        while e:
            if e & 1:
                acc = _raw_mul(acc, base, p, r, modulus)
            base = _raw_mul(base, base, p, r, modulus)
            e >>= 1
        if acc == 1:
            return False
    return True


def build_field(p: int, r: int, *, size_limit: int = DEFAULT_SIZE_LIMIT,
                alt_generator: bool = False) -> FieldContext:
    """Construct GF(p^r) deterministically.

    The modulus is the first monic irreducible found in base-p order and the
    primitive element is the generator with the smallest element index, so
    repeated builds are identical.  ``alt_generator`` selects the next
    generator instead, which downstream determinism tests rely on.
    """
    if r < 1:
        raise ValueError("exponent r must be positive")
    if not is_prime(p):
        raise CompositeP(f"{p} is not prime")
    q = p ** r
    if q > size_limit:
        raise SizeLimit(f"q={q} exceeds the cap {size_limit}")

    modulus = _smallest_irreducible(p, r)
    qm1_primes = sorted(factorize(q - 1)) if q > 2 else []

    generators = []
    for g in range(1, q):
        if _element_order_is_maximal(g, p, r, q, modulus, qm1_primes):
            generators.append(g)
            if len(generators) > (1 if alt_generator else 0):
                break
    if alt_generator and len(generators) < 2:
        raise ValueError(f"GF({q}) has no second generator")
    omega = generators[-1]

    exp_table = [0] * (q - 1)
    log_table = [0] * q
    x = 1
    for j in range(q - 1):
        exp_table[j] = x
        log_table[x] = j
        x = _raw_mul(x, omega, p, r, modulus)
    assert x == 1, "generator order mismatch"

    return FieldContext(
        p=p, r=r, q=q,
        modulus=tuple(modulus),
        primitive_index=omega,
        exp_table=exp_table,
        log_table=log_table,
    )


def validate_paley_params(k: int, ctx: FieldContext) -> None:
    """q = 1 (mod k) for even q, q = 1 (mod 2k) for odd q; this is exactly
    the condition making -1 a k-th power, so the graph is undirected."""
    if k < 2:
        raise InvalidCongruence(f"k={k} must be at least 2")
    q = ctx.q
    modulus = k if q % 2 == 0 else 2 * k
    if q % modulus != 1:
        raise InvalidCongruence(f"q={q} is not 1 mod {modulus} (k={k})")


def is_kth_power(ctx: FieldContext, a: int, k: int) -> bool:
    if a == 0:
        raise ZeroInput("0 is neither a k-th power nor a non-power here")
    if (ctx.q - 1) % k != 0:
        raise ValueError(f"k={k} does not divide q-1={ctx.q - 1}")
    return ctx.dlog(a) % k == 0


def kth_power_residues(ctx: FieldContext, k: int) -> list[int]:
    """S_k as a sorted list of element indices."""
    if (ctx.q - 1) % k != 0:
        raise ValueError(f"k={k} does not divide q-1={ctx.q - 1}")
    return sorted(ctx.exp_table[0::k])


def split_prime_power(q: int) -> tuple[int, int]:
    """Write q = p^r or raise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    ((p, r),) = fac.items()
    return p, r
