"""Exact integer helpers: square roots, prime powers, bounded factoring.

Everything here works on Python ints, so there is no overflow and no rounding.
Primality is delegated to GMP (BPSW plus extra Miller-Rabin rounds), which is
deterministic below 2**64.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

import gmpy2

TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 200_000
MR_ROUNDS = 40


class FactorBudgetExceeded(ArithmeticError):
    """Raised when a factorization could not be completed within its budget.

    This is the "Unknown" outcome: it says nothing about the number itself.
    """

    def __init__(self, n: int, partial: dict[int, int], cofactor: int):
        super().__init__(f"could not factor {cofactor} (part of {n}) within budget")
        self.n = n
        self.partial = partial
        self.cofactor = cofactor


@dataclass(frozen=True)
class PrimePower:
    """``sign * base**exponent`` with ``base`` an odd prime."""

    base: int
    exponent: int
    sign: int = 1

    def __post_init__(self):
        if self.base < 3 or self.base % 2 == 0 or not is_prime(self.base):
            raise ValueError(f"{self.base} is not an odd prime")
        if self.exponent < 1:
            raise ValueError("exponent must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def value(self) -> int:
        return self.sign * self.base**self.exponent


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return bool(gmpy2.is_prime(n, MR_ROUNDS))


def isqrt(n: int) -> int:
    """Floor of the square root of a non-negative integer."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def as_square(n: int) -> int | None:
    """Return ``s >= 0`` with ``s*s == n``, or None if n is not a square."""
    if n < 0:
        return None
    s = math.isqrt(n)
    return s if s * s == n else None


def iroot_exact(n: int, k: int) -> int | None:
    """Exact k-th root of ``n >= 0`` if there is one."""
    root, exact = gmpy2.iroot(n, k)
    return int(root) if exact else None


def perfect_power_exponent(n: int) -> int:
    """Largest ``l`` with ``|n| = m**l`` for some integer m (1 for non-powers).

    Negative n only admits odd exponents. 0 and +-1 return 1.
    """
    m = abs(n)
    if m < 2:
        return 1
    for k in range(m.bit_length(), 1, -1):
        if n < 0 and k % 2 == 0:
            continue
        if iroot_exact(m, k) is not None:
            return k
    return 1


def odd_prime_power(n: int) -> PrimePower | None:
    """Write ``n = sign * q**r`` with q an odd prime, or return None.

    No factoring is needed: if ``|n| = q**r`` then the exact r-th root of
    ``|n|`` is the prime q, and it is the only exponent with a prime root.
    """
    if n == 0:
        raise ValueError("odd_prime_power(0) is undefined")
    m = abs(n)
    if m == 1 or m % 2 == 0:
        return None
    sign = 1 if n > 0 else -1
    for r in range(1, m.bit_length() + 1):
        q = iroot_exact(m, r)
        if q is None:
            continue
        if q < 3:
            break
        if is_prime(q):
            return PrimePower(q, r, sign)
    return None


@lru_cache(maxsize=1)
def _small_primes(limit: int = TRIAL_LIMIT) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _brent_rho(n: int, budget: int, rng: random.Random) -> int | None:
    # Brent's cycle-finding variant; returns a proper factor or None when the
    # iteration budget is spent.
    spent = 0
    while spent < budget:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1 and spent < budget:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            spent += r
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factor_bounded(n: int, budget: int = DEFAULT_BUDGET) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as ``{prime: exponent}``.

    Trial division up to 10**6, then Brent-Pollard rho with at most ``budget``
    iterations in total. Raises FactorBudgetExceeded instead of guessing.
    """
    if n < 1:
        raise ValueError("factor_bounded needs n >= 1")
    factors: dict[int, int] = {}
    m = n
    for p in _small_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors[p] = e
        if p == 997 and m > 1 and is_prime(m):
            break
    pending = [m] if m > 1 else []
    rng = random.Random(n)
    remaining = budget
    while pending:
        c = pending.pop()
        if is_prime(c):
            factors[c] = factors.get(c, 0) + 1
            continue
        root = _power_root(c)
        if root is not None:
            base, k = root
            pending.extend([base] * k)
            continue
        d = _brent_rho(c, remaining, rng)
        if d is None:
            raise FactorBudgetExceeded(n, dict(sorted(factors.items())), c)
        remaining = max(remaining // 2, 1)
        pending.extend([d, c // d])
    return dict(sorted(factors.items()))


def _power_root(n: int) -> tuple[int, int] | None:
    k = perfect_power_exponent(n)
    if k == 1:
        return None
    return iroot_exact(n, k), k


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise ValueError("binomial needs non-negative arguments")
    if k > n:
        raise ValueError(f"binomial({n}, {k}) with k > n")
    return math.comb(n, k)


def radical(n: int, budget: int = DEFAULT_BUDGET) -> int:
    """Product of the distinct primes dividing ``n``."""
    return math.prod(factor_bounded(n, budget))


def squarefree_decomposition(n: int, budget: int = DEFAULT_BUDGET) -> tuple[int, int]:
    """Return ``(s, k)`` with ``n = s*s*k`` and k square-free (n >= 1)."""
    s, k = 1, 1
    for p, e in factor_bounded(n, budget).items():
        s *= p ** (e // 2)
        if e % 2:
            k *= p
    return s, k


def is_squarefree(n: int, budget: int = DEFAULT_BUDGET) -> bool:
    if n < 1:
        raise ValueError("is_squarefree needs n >= 1")
    return all(e == 1 for e in factor_bounded(n, budget).values())
