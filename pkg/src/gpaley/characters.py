"""Multiplicative characters of F_q* with the chi(0) = 0 convention.

A character is just its exponent multiplier m against the fixed primitive
element: chi(omega^j) = zeta_(q-1)^(m*j).  Values come back as exact
cyclotomic integers in the smallest conductor containing the character's
order (or any requested multiple of it).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .cyclotomic import CycInt, zeta_pow
from .errors import OrderNotDividing, ZeroInput
from .finite_field import FieldContext


@dataclass(frozen=True)
class MultChar:
    ctx: FieldContext
    m: int

    def __post_init__(self):
        object.__setattr__(self, "m", self.m % (self.ctx.q - 1))

    @property
    def order(self) -> int:
        qm1 = self.ctx.q - 1
        return qm1 // gcd(self.m, qm1)

    @property
    def is_trivial(self) -> bool:
        return self.m == 0

    def __mul__(self, other: MultChar) -> MultChar:
        assert self.ctx is other.ctx
        return MultChar(self.ctx, self.m + other.m)

    def __pow__(self, e: int) -> MultChar:
        return MultChar(self.ctx, self.m * e)

    def conj(self) -> MultChar:
        return MultChar(self.ctx, -self.m)

    def exponent_in(self, conductor: int) -> int:
        """x with chi = (canonical order-conductor character)^x."""
        qm1 = self.ctx.q - 1
        if qm1 % conductor != 0 or conductor % self.order != 0:
            raise OrderNotDividing(f"order {self.order} does not divide {conductor}")
        return (self.m * conductor) // qm1

    def eval(self, a: int, conductor: int | None = None) -> CycInt:
        """chi(a) as a CycInt; zero at a = 0 for every character."""
        d = conductor if conductor is not None else self.order
        if a == 0:
            return CycInt.zero(d)
        x = self.exponent_in(d)
        return zeta_pow(d, x * self.ctx.dlog(a))

    def sign_at_minus_one(self) -> int:
        """chi(-1) as a plain +-1 integer."""
        return self.eval(self.ctx.neg(1)).as_integer()


def canonical_char(ctx: FieldContext, k: int) -> MultChar:
    """The order-k character with chi_k(omega) = zeta_k."""
    if (ctx.q - 1) % k != 0:
        raise OrderNotDividing(f"{k} does not divide q-1={ctx.q - 1}")
    return MultChar(ctx, (ctx.q - 1) // k)


def trivial_char(ctx: FieldContext) -> MultChar:
    return MultChar(ctx, 0)


def char_eval(chi: MultChar, a: int, conductor: int | None = None) -> CycInt:
    return chi.eval(a, conductor)


def orthogonality_sum(ctx: FieldContext, k: int, b: int) -> int:
    """(1/k) sum_t chi_k^t(b): 1 when b is a k-th power, else 0."""
    if b == 0:
        raise ZeroInput("orthogonality sum needs b nonzero")
    chi = canonical_char(ctx, k)
    total = CycInt.zero(k)
    for t in range(k):
        total = total + (chi ** t).eval(b, conductor=k)
    value = total.as_integer()
    assert value % k == 0
    return value // k
