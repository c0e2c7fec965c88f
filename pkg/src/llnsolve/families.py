"""The six infinite families of solutions of 7x^2 + (b^l)^2 = 4y^3.

Each family is a stream of odd pairs (u, v) on one of four Pell-type
equations, pushed through the cube ((u + v sqrt(-7)) / 2)^3:

    x    = (3 u^2 v - 7 v^3) / 4
    y    = (u^2 + 7 v^2) / 4
    b^l  = (u^3 - 21 u v^2) / 4

F1: u^2 - 21 v^2 = 4, odd solutions.
F2, F3: 7 v^2 - 3 u^2 = 4 via (v, u) = (s + 3r, s + 7r) and (-s + 3r, s - 7r),
    where s^2 - 21 r^2 = 1 runs over (1, 0), (55, 12), ...
F4, F5: as F2, F3 but with u = 3t on 7 v^2 - 3 t^2 = 4.
F6: u^2 - 21 t^2 = 4, odd solutions, with v = 3t.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator

from .arith import PrimePower, odd_prime_power, perfect_power_exponent
from .lehmer import half_power
from .pell import FORM_21, PellForm, form734_parametrizations, iter_solutions


class FamilyId(str, Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"


PELL_SOURCE = {
    FamilyId.F1: "u^2 - 21v^2 = 4",
    FamilyId.F2: "7v^2 - 3u^2 = 4",
    FamilyId.F3: "7v^2 - 3u^2 = 4",
    FamilyId.F4: "7v^2 - 3t^2 = 4",
    FamilyId.F5: "7v^2 - 3t^2 = 4",
    FamilyId.F6: "u^2 - 21t^2 = 4",
}


@dataclass(frozen=True)
class FamilyMember:
    id: FamilyId
    index: int
    u: int
    v: int
    x: int
    y: int
    blpow: int

    def __post_init__(self):
        if 7 * self.x**2 + self.blpow**2 != 4 * self.y**3:
            raise ArithmeticError(f"{self} does not satisfy 7x^2 + b^2l = 4y^3")
        if self.u % 2 == 0 or self.v % 2 == 0:
            raise ValueError("family members need u, v odd")

    @property
    def congruence_flag(self) -> int:
        """4 b^l mod 7."""
        return 4 * self.blpow % 7

    @property
    def coprime(self) -> bool:
        return math.gcd(self.x, self.y) == 1

    @property
    def coprime_to_3(self) -> bool:
        return self.blpow % 3 != 0

    @cached_property
    def prime_power(self) -> PrimePower | None:
        """b^l as +-q^r with q an odd prime, if it is one."""
        return odd_prime_power(self.blpow)

    @cached_property
    def power_exponent(self) -> int:
        """Largest l such that b^l is an exact l-th power."""
        return perfect_power_exponent(self.blpow)

    def signed(self) -> list[tuple[int, int, int]]:
        """All (x, y, b^l) sign variants; the equation is even in x and b^l."""
        return [(sx * self.x, self.y, sb * self.blpow) for sx in (1, -1) for sb in (1, -1)]


def member_from_uv(fid: FamilyId, index: int, u: int, v: int) -> FamilyMember:
    h = half_power(u, v, 7, 3)
    return FamilyMember(fid, index, u, v, h.B, (u * u + 7 * v * v) // 4, h.A)


def _odd_pell_21() -> Iterator[tuple[int, int, int]]:
    for s in iter_solutions(PellForm(21, 4)):
        if s.u % 2 and s.v % 2:
            yield s.index, s.u, s.v


def _s_r() -> Iterator[tuple[int, int, int]]:
    for s in iter_solutions(FORM_21, start=0):
        yield s.index, s.u, s.v


def iter_family(fid: FamilyId | str) -> Iterator[FamilyMember]:
    """Members of one family in generation order (index = Pell index)."""
    fid = FamilyId(fid)
    if fid is FamilyId.F1:
        for t, u, v in _odd_pell_21():
            yield member_from_uv(fid, t, u, v)
    elif fid is FamilyId.F6:
        for m, u, t in _odd_pell_21():
            yield member_from_uv(fid, m, u, 3 * t)
    else:
        branch = 0 if fid in (FamilyId.F2, FamilyId.F4) else 1
        scale = 3 if fid in (FamilyId.F4, FamilyId.F5) else 1
        for t, s, r in _s_r():
            v, u = form734_parametrizations(s, r)[branch]
            yield member_from_uv(fid, t, scale * u, v)


def generate(fid: FamilyId | str, count: int) -> list[FamilyMember]:
    if count < 1:
        raise ValueError("count must be positive")
    return list(itertools.islice(iter_family(fid), count))


@dataclass(frozen=True)
class Membership:
    family: FamilyId | None = None
    index: int | None = None
    exhausted: bool = False

    def __bool__(self) -> bool:
        return self.family is not None


def is_member(value: int, budget: int = 1000) -> Membership:
    """Find ``b^l = +-value`` in some family, F1 first.

    Each family is walked in order of increasing |b^l| and abandoned once
    |b^l| exceeds |value|. A miss with ``exhausted=True`` is not definitive.
    """
    if value % 2 == 0:
        raise ValueError("b^l must be odd")
    target = abs(value)
    exhausted = False
    for fid in FamilyId:
        for steps, member in enumerate(iter_family(fid)):
            if steps >= budget:
                exhausted = True
                break
            if abs(member.blpow) == target:
                return Membership(fid, member.index)
            if abs(member.blpow) > target:
                break
    return Membership(exhausted=exhausted)
