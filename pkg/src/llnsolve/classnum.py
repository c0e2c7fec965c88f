"""Class numbers of imaginary quadratic fields Q(sqrt(-a)).

h(-a) is the number of reduced primitive forms (A, B, C) of the field
discriminant, which is -a when a = 3 (mod 4) and -4a otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import is_squarefree

SPECIAL_SET = (7, 11, 19, 43, 67, 163)


@dataclass(frozen=True)
class ClassNumberResult:
    a: int
    discriminant: int
    h: int


def field_discriminant(a: int) -> int:
    return -a if a % 4 == 3 else -4 * a


def reduced_forms(disc: int) -> list[tuple[int, int, int]]:
    """Reduced primitive forms of a negative discriminant, B-outer order."""
    if disc >= 0 or disc % 4 not in (0, 1):
        raise ValueError(f"{disc} is not a negative discriminant")
    d = -disc
    forms = []
    b = disc % 2
    # reduced forms have |B| <= A <= sqrt(|D|/3)
    while 3 * b * b <= d:
        ac = (b * b + d) // 4
        a = max(b, 1)
        while a * a <= ac:
            if ac % a == 0:
                c = ac // a
                if math.gcd(math.gcd(a, b), c) == 1:
                    forms.append((a, b, c))
                    if 0 < b < a and a < c:
                        forms.append((a, -b, c))
            a += 1
        b += 2
    return sorted(forms)


def class_number(a: int) -> ClassNumberResult:
    """h(-a) for a positive square-free a."""
    if a < 1 or not is_squarefree(a):
        raise ValueError(f"{a} is not a positive square-free integer")
    disc = field_discriminant(a)
    return ClassNumberResult(a, disc, len(reduced_forms(disc)))


@lru_cache(maxsize=8)
def form_counts(max_abs_disc: int) -> np.ndarray:
    """Number of reduced primitive forms for every |D| <= max_abs_disc.

    Enumerates A outermost, then B, with all admissible C at once; this is an
    independent route from :func:`reduced_forms`.
    """
    counts = np.zeros(max_abs_disc + 1, dtype=np.int64)
    a = 1
    while 3 * a * a <= max_abs_disc:
        for b in range(-a + 1, a + 1):
            c_max = (max_abs_disc + b * b) // (4 * a)
            if c_max < a:
                continue
            c = np.arange(a, c_max + 1, dtype=np.int64)
            keep = np.gcd(np.gcd(a, abs(b)), c) == 1
            if b < 0:
                keep &= c > a
            counts_idx = 4 * a * c[keep] - b * b
            np.add.at(counts, counts_idx, 1)
        a += 1
    counts.flags.writeable = False
    return counts


def class_numbers_upto(bound: int) -> dict[int, int]:
    """``{a: h(-a)}`` for every square-free ``1 <= a <= bound``."""
    counts = form_counts(4 * bound)
    return {
        a: int(counts[-field_discriminant(a)])
        for a in range(1, bound + 1)
        if is_squarefree(a)
    }


def tally_class_numbers(h_target: int, bound: int) -> list[int]:
    """Square-free a <= bound with h(-a) == h_target, ascending."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    return [a for a, h in class_numbers_upto(bound).items() if h == h_target]
