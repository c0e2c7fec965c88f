"""Lehmer pairs attached to solutions and their Lehmer numbers.

A pair of odd coprime integers (u, v) and a prime p = 3 (mod 4) give the
Lehmer pair alpha = (v sqrt(p) + u i) / 2 and its conjugate, with
(alpha + conj)^2 = p v^2 and (alpha - conj)^2 = -u^2. The odd-index Lehmer
numbers are obtained from the real part of ((u + v sqrt(-p)) / 2)^n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .arith import FactorBudgetExceeded, DEFAULT_BUDGET, binomial, factor_bounded, is_prime


class NotIntegralError(ArithmeticError):
    """A quantity that should be an integer is not (usually p != 3 mod 4)."""


@dataclass(frozen=True)
class HalfElem:
    """The ring element (A + B sqrt(-p)) / 2."""

    A: int
    B: int
    p: int

    def __post_init__(self):
        if (self.A - self.B) % 2:
            raise ValueError("A and B must have the same parity")

    def __mul__(self, other: "HalfElem") -> "HalfElem":
        if self.p != other.p:
            raise ValueError("elements of different rings")
        re = self.A * other.A - self.p * self.B * other.B
        im = self.A * other.B + self.B * other.A
        if re % 2 or im % 2 or (re - im) % 4:
            raise NotIntegralError(f"product leaves Z[(1+sqrt(-{self.p}))/2]")
        return HalfElem(re // 2, im // 2, self.p)

    def norm(self) -> int:
        """(A^2 + p B^2) / 4."""
        n, rem = divmod(self.A * self.A + self.p * self.B * self.B, 4)
        if rem:
            raise NotIntegralError("norm is not an integer")
        return n


@dataclass(frozen=True)
class LehmerParams:
    u: int
    v: int
    p: int

    def __post_init__(self):
        if self.u % 2 == 0 or self.v % 2 == 0:
            raise ValueError("u and v must be odd")
        if math.gcd(self.u, self.v) != 1:
            raise ValueError("u and v must be coprime")

    @property
    def signature(self) -> tuple[int, int]:
        """((alpha + beta)^2, (alpha - beta)^2) as an ordered pair."""
        return self.p * self.v * self.v, -self.u * self.u


@dataclass(frozen=True)
class DefectiveClass:
    n: int
    signature: tuple[int, int]
    description: str

    def __post_init__(self):
        if self.signature[0] * self.signature[1] == 0:
            raise ValueError("signature entries must be non-zero")


class Primitive(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def half_power(u: int, v: int, p: int, n: int) -> HalfElem:
    """((u + v sqrt(-p)) / 2)^n by square-and-multiply."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be an odd positive integer")
    base = HalfElem(u, v, p)
    result = base
    n -= 1
    while n:
        if n & 1:
            result = result * base
        base = base * base
        n >>= 1
    return result


def real_part_sum(u: int, v: int, p: int, n: int) -> int:
    """sum_{r=0}^{(n-1)/2} C(n, 2r) u^(n-2r-1) (-p)^r v^(2r).

    Satisfies 2^(n-1) A = u * S for (A, B) = half_power(u, v, p, n).
    """
    return sum(
        binomial(n, 2 * r) * u ** (n - 2 * r - 1) * (-p) ** r * v ** (2 * r)
        for r in range((n - 1) // 2 + 1)
    )


def lehmer_number_abs(params: LehmerParams, n: int) -> int:
    """|(alpha^n - beta^n) / (alpha - beta)| for odd n."""
    s = real_part_sum(params.u, params.v, params.p, n)
    q, rem = divmod(abs(s), 2 ** (n - 1))
    if rem:
        raise NotIntegralError(f"2^{n - 1} does not divide {s}")
    return q


def _normalize(sig: tuple[int, int]) -> tuple[int, int]:
    return tuple(sorted(sig))


def is_equivalent(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    """Unordered signatures equal up to negating both entries at once."""
    a = _normalize(c1)
    return a == _normalize(c2) or a == _normalize((-c2[0], -c2[1]))


def has_primitive_divisor(params: LehmerParams, n: int, budget: int = DEFAULT_BUDGET) -> Primitive:
    """Whether the n-th Lehmer number has a prime factor that is new.

    A prime is primitive here when it divides the n-th term but neither
    p v^2 u^2 nor any earlier odd-index term.
    """
    if n < 3 or not is_prime(n):
        raise ValueError("n must be an odd prime")
    target = lehmer_number_abs(params, n)
    if target == 1:
        return Primitive.NO
    try:
        primes = factor_bounded(target, budget)
    except FactorBudgetExceeded:
        return Primitive.UNKNOWN
    u, v, p = params.u, params.v, params.p
    earlier = [lehmer_number_abs(params, m) for m in range(1, n, 2)]
    blocked = p * v * v * u * u
    for q in primes:
        if blocked % q and all(t % q for t in earlier):
            return Primitive.YES
    return Primitive.NO


_NAMED = {
    7: [
        DefectiveClass(7, (1, -7), "((1 - sqrt(-7))/2, (1 + sqrt(-7))/2)"),
        DefectiveClass(7, (1, -19), "((1 - sqrt(-19))/2, (1 + sqrt(-19))/2)"),
    ],
    13: [DefectiveClass(13, (1, -7), "((1 - sqrt(-7))/2, (1 + sqrt(-7))/2)")],
}


def named_defective_pairs(n: int) -> list[DefectiveClass]:
    """The defective classes for n = 7 and n = 13 that fit the equation.

    Only the classes of shape ((1 - sqrt(-p))/2, (1 + sqrt(-p))/2) are
    listed; the remaining n = 7 classes never have (alpha+beta)^2 = p v^2.
    """
    try:
        return list(_NAMED[n])
    except KeyError:
        raise ValueError(f"no named defective classes for n = {n}") from None
