"""Pell-type equations u^2 - D v^2 = N for N in {1, -1, 4, -4}.

Fundamental solutions come from the PQa continued-fraction recurrence: with
convergent numerators G_i and denominators B_i of (P0 + sqrt(D)) / Q0,

    G_i^2 - D B_i^2 = (-1)^(i+1) Q_{i+1} Q0,

so the places where Q_{i+1} returns to Q0 give solutions for N = +-Q0^2.
Solutions with N = +-4 are kept in doubled coordinates, i.e. (u, v) stands
for (u + v sqrt(D)) / 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .arith import as_square, isqrt

ALLOWED_N = (1, -1, 4, -4)


@dataclass(frozen=True)
class PellForm:
    D: int
    N: int

    def __post_init__(self):
        if self.D < 2 or as_square(self.D) is not None:
            raise ValueError(f"D = {self.D} must be a positive non-square")
        if self.N not in ALLOWED_N:
            raise ValueError(f"N = {self.N} not in {ALLOWED_N}")

    def value(self, u: int, v: int) -> int:
        return u * u - self.D * v * v


@dataclass(frozen=True)
class PellSolution:
    u: int
    v: int
    form: PellForm
    index: int = 1

    def __post_init__(self):
        if self.form.value(self.u, self.v) != self.form.N:
            raise ValueError(f"({self.u}, {self.v}) does not solve {self.form}")


class SolutionList(list):
    """A list of solutions that remembers whether the search stopped early."""

    truncated: bool = False


def _pqa(P0: int, Q0: int, D: int) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(a_i, G_i, B_i, Q_{i+1})`` for i = 0, 1, 2, ..."""
    s = isqrt(D)
    P, Q = P0, Q0
    G_prev, G = -P0, Q0
    B_prev, B = 1, 0
    while True:
        a = (P + s) // Q
        G_prev, G = G, a * G + G_prev
        B_prev, B = B, a * B + B_prev
        P = a * Q - P
        Q = (D - P * P) // Q
        yield a, G, B, Q


def cf_expansion(D: int) -> tuple[int, list[int]]:
    """Continued fraction of sqrt(D) as ``(a0, period)``."""
    s = isqrt(D)
    if s * s == D:
        raise ValueError(f"{D} is a perfect square")
    terms = []
    steps = _pqa(0, 1, D)
    next(steps)
    for a, _, _, _ in steps:
        terms.append(a)
        if a == 2 * s:
            return s, terms


def _period_hit(P0: int, Q0: int, D: int, sign: int) -> tuple[int, int] | None:
    # Scan two periods of the expansion for the first Q_{i+1} == Q0 whose
    # norm sign matches; the expansion of a reduced quadratic surd is purely
    # periodic after the first term, so two periods see every case.
    seen = None
    for i, (_, G, B, Q) in enumerate(_pqa(P0, Q0, D)):
        if Q == Q0:
            if (-1) ** (i + 1) == sign:
                return G, B
            if seen is not None:
                return None
            seen = i
        if i > 4 * D + 8:
            raise RuntimeError("continued fraction did not close")


def _minimal_candidate(form: PellForm) -> tuple[int, int] | None:
    D, N = form.D, form.N
    sign = 1 if N > 0 else -1
    base = _period_hit(0, 1, D, sign)
    if abs(N) == 1:
        return base
    candidates = []
    if base is not None:
        candidates.append((2 * base[0], 2 * base[1]))
    if D % 4 == 1:
        # u, v both odd, only possible for D = 5 (mod 8)
        half = _period_hit(1, 2, D, sign)
        if half is not None:
            candidates.append(half)
    elif D % 4 == 0 and as_square(D // 4) is None:
        # u even, v odd: (u/2)^2 - (D/4) v^2 = +-1
        quarter = _period_hit(0, 1, D // 4, sign)
        if quarter is not None:
            candidates.append((2 * quarter[0], quarter[1]))
    return min(candidates, key=lambda c: c[1]) if candidates else None


def fundamental_solution(form: PellForm) -> PellSolution | None:
    """Solution with the smallest positive v (and u > 0), or None."""
    hit = _minimal_candidate(form)
    if hit is None:
        return None
    return PellSolution(abs(hit[0]), abs(hit[1]), form, 1)


@dataclass(frozen=True)
class _Unit:
    u: int
    v: int
    halved: bool


def _unit_for(form: PellForm) -> _Unit:
    # Solutions of N = +-4 move by the fundamental solution of N = 4; those
    # of N = +-1 by the fundamental solution of N = 1.
    if abs(form.N) == 4:
        f = fundamental_solution(PellForm(form.D, 4))
        return _Unit(f.u, f.v, True)
    f = fundamental_solution(PellForm(form.D, 1))
    return _Unit(f.u, f.v, False)


def _compose(u: int, v: int, unit: _Unit, D: int) -> tuple[int, int]:
    nu = u * unit.u + D * v * unit.v
    nv = u * unit.v + v * unit.u
    if unit.halved:
        if nu % 2 or nv % 2:
            raise ArithmeticError("half-integral composition left the ring")
        return nu // 2, nv // 2
    return nu, nv


def next_solution(s: PellSolution) -> PellSolution:
    u, v = _compose(s.u, s.v, _unit_for(s.form), s.form.D)
    return PellSolution(u, v, s.form, s.index + 1)


def iter_solutions(form: PellForm, start: int = 1) -> Iterator[PellSolution]:
    """Solutions in increasing v starting from the fundamental one (index 1).

    With ``start=0`` the trivial solution (2, 0) or (1, 0) is yielded first
    for N = 4 or N = 1.
    """
    if start == 0:
        if form.N not in (1, 4):
            raise ValueError("index 0 only exists for N = 1 or N = 4")
        yield PellSolution(2 if form.N == 4 else 1, 0, form, 0)
    s = fundamental_solution(form)
    if s is None:
        return
    while True:
        yield s
        s = next_solution(s)


def odd_solutions(form: PellForm, count: int, patience: int = 10) -> SolutionList:
    """First ``count`` solutions with u and v both odd, ascending v.

    Gives up after ``count * patience`` candidates; the returned list then has
    ``truncated = True``.
    """
    if count < 1:
        raise ValueError("count must be positive")
    if fundamental_solution(form) is None:
        raise ValueError(f"{form} has no solutions")
    found = SolutionList()
    for i, s in enumerate(iter_solutions(form)):
        if i >= count * patience:
            found.truncated = True
            break
        if s.u % 2 and s.v % 2:
            found.append(s)
            if len(found) == count:
                break
    return found


FORM_21 = PellForm(21, 1)


def form734_parametrizations(s: int, r: int) -> list[tuple[int, int]]:
    """The three (v, u) maps from s^2 - 21 r^2 = 1 onto 7v^2 - 3u^2 = 4."""
    return [(s + 3 * r, s + 7 * r), (-s + 3 * r, s - 7 * r), (4 * s + 18 * r, 6 * s + 28 * r)]


def form734_solutions(count: int) -> list[tuple[int, int]]:
    """Odd solutions (v, u) of 7v^2 - 3u^2 = 4, deduplicated up to sign.

    Built from (s, r) = (1, 0), (55, 12), ... through the first two maps; the
    third map always gives even pairs and is dropped by the oddness filter.
    """
    if count < 1:
        raise ValueError("count must be positive")
    out: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for sol in iter_solutions(FORM_21, start=0):
        for v, u in form734_parametrizations(sol.u, sol.v):
            if 7 * v * v - 3 * u * u != 4:
                raise ArithmeticError(f"({v}, {u}) does not solve 7v^2 - 3u^2 = 4")
            if v % 2 == 0 or u % 2 == 0:
                continue
            key = (abs(v), abs(u))
            if key in seen:
                continue
            seen.add(key)
            out.append((v, u))
            if len(out) == count:
                return out
    return out
