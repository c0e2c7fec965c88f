"""Fibonacci and Lucas numbers and the square scans used for n = 5.

The scans only confirm the classical classifications (squares among F_k,
L_k, 5 F_k, F_k + F_{k+2e}) up to a bound; the full statements are theorems
the solver takes as given.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .arith import as_square


class Kind(str, Enum):
    FIB = "fib"
    LUCAS = "lucas"


@dataclass(frozen=True)
class FibLucasPair:
    k: int
    F: int
    L: int


def _fib_pair(k: int) -> tuple[int, int]:
    # fast doubling: returns (F_k, F_{k+1})
    if k == 0:
        return 0, 1
    a, b = _fib_pair(k >> 1)
    c = a * (2 * b - a)
    d = a * a + b * b
    return (d, c + d) if k & 1 else (c, d)


def fib_lucas(k: int) -> FibLucasPair:
    if k < 0:
        raise ValueError("negative index")
    f, f_next = _fib_pair(k)
    # L_k = F_{k-1} + F_{k+1} = 2 F_{k+1} - F_k
    return FibLucasPair(k, f, 2 * f_next - f)


@lru_cache(maxsize=None)
def _table(bound: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    F, L = [0, 1], [2, 1]
    while len(F) <= bound:
        F.append(F[-1] + F[-2])
        L.append(L[-1] + L[-2])
    return tuple(F[: bound + 1]), tuple(L[: bound + 1])


def fib(k: int) -> int:
    return fib_lucas(k).F


def lucas(k: int) -> int:
    return fib_lucas(k).L


def square_scan(kind: Kind | str, bound: int) -> list[int]:
    """Indices k <= bound whose Fibonacci (or Lucas) number is a square."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    F, L = _table(bound)
    seq = F if Kind(kind) is Kind.FIB else L
    return [k for k, term in enumerate(seq) if as_square(term) is not None]


def five_fib_square_scan(bound: int) -> list[int]:
    """Indices m <= bound with 5 F_m a perfect square."""
    if bound < 2:
        raise ValueError("bound must be >= 2")
    F, _ = _table(bound)
    return [m for m, f in enumerate(F) if as_square(5 * f) is not None]


def adjacent_sum_square_scan(bound: int) -> list[tuple[int, int]]:
    """Pairs (k, e), 3 <= k <= bound, e = +-1, with F_k + F_{k+2e} a square."""
    if bound < 3:
        raise ValueError("bound must be >= 3")
    F, _ = _table(bound + 2)
    hits = []
    for k in range(3, bound + 1):
        for eps in (1, -1):
            if as_square(F[k] + F[k + 2 * eps]) is not None:
                hits.append((k, eps))
    return hits
