"""Brute-force search for a x^2 + b^(2l) = 4 y^n and corpus verification.

The search walks y upward: for each y it forms T = 4 y^n - b^(2l) and keeps
the y when T is a positive multiple of a with T / a a square x^2 and
gcd(x, y) = 1. Only integer arithmetic is used.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable

from .arith import is_prime, odd_prime_power


@dataclass(frozen=True)
class SolutionTuple:
    a: int
    x: int
    y: int
    b: int
    l: int
    n: int

    def __post_init__(self):
        problems = tuple_problems(self.a, self.x, self.y, self.b, self.l, self.n)
        if problems:
            raise ValueError(f"{self.as_tuple()}: " + "; ".join(problems))

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return self.a, self.x, self.y, self.b, self.l, self.n

    def canonical(self) -> "SolutionTuple":
        return SolutionTuple(self.a, abs(self.x), self.y, abs(self.b), self.l, self.n)

    def signed_variants(self) -> list["SolutionTuple"]:
        return [
            SolutionTuple(self.a, sx * abs(self.x), self.y, sb * abs(self.b), self.l, self.n)
            for sx in (1, -1)
            for sb in (1, -1)
        ]


def equation_holds(a: int, x: int, y: int, b: int, l: int, n: int) -> bool:
    return a * x * x + b ** (2 * l) == 4 * y**n


def tuple_problems(a: int, x: int, y: int, b: int, l: int, n: int) -> list[str]:
    """Reasons why (a, x, y, b, l, n) is not a valid solution; empty if valid."""
    problems = []
    if a < 1:
        problems.append("a must be positive")
    if b % 2 == 0:
        problems.append("b must be odd")
    if l < 1:
        problems.append("l must be >= 1")
    if n < 3 or not is_prime(n):
        problems.append("n is not an odd prime")
    if l >= 1 and n >= 0 and not equation_holds(a, x, y, b, l, n):
        problems.append("equation fails")
    if math.gcd(x, y) != 1:
        problems.append("gcd(x, y) != 1")
    return problems


def congruence_residues(a: int, b: int, l: int, n: int) -> tuple[int, int]:
    """2^(n-1) b^l mod a for b and for -b."""
    return pow(2, n - 1, a) * pow(b, l, a) % a, pow(2, n - 1, a) * pow(-b, l, a) % a


# ---------------------------------------------------------------- search


@dataclass(frozen=True)
class SearchReport:
    instance: tuple[int, int, int, int]
    y_max: int
    solutions: tuple[SolutionTuple, ...]
    elapsed: float
    partitions: int


def _scan_chunk(a: int, b: int, l: int, n: int, lo: int, hi: int) -> list[tuple[int, int]]:
    found = []
    b2l = b ** (2 * l)
    for y in range(lo, hi + 1):
        t = 4 * y**n - b2l
        if t <= 0 or t % a:
            continue
        sq = t // a
        x = math.isqrt(sq)
        if x * x == sq and math.gcd(x, y) == 1:
            found.append((x, y))
    return found


def _chunks(y_max: int, k: int) -> list[tuple[int, int]]:
    k = max(1, min(k, y_max))
    size, extra = divmod(y_max, k)
    out, lo = [], 1
    for i in range(k):
        hi = lo + size - 1 + (1 if i < extra else 0)
        out.append((lo, hi))
        lo = hi + 1
    return out


def brute_force(
    a: int,
    b: int,
    l: int,
    n: int,
    y_max: int,
    partitions: int = 1,
    executor: Executor | None = None,
) -> SearchReport:
    """All solutions with 1 <= y <= y_max, ascending in y.

    With ``partitions > 1`` the y-range is cut into contiguous chunks that run
    on ``executor`` (a fresh process pool when none is given). Chunks are
    merged in range order, so the result does not depend on scheduling.
    """
    if a < 1 or a % 2 == 0 or b % 2 == 0 or math.gcd(a, b) != 1:
        raise ValueError("a, b must be odd and coprime with a > 0")
    if n < 3 or not is_prime(n):
        raise ValueError("n must be an odd prime")
    if l < 1 or y_max < 1:
        raise ValueError("l and y_max must be >= 1")
    start = time.perf_counter()
    chunks = _chunks(y_max, partitions)
    if len(chunks) == 1:
        parts = [_scan_chunk(a, b, l, n, *chunks[0])]
    elif executor is not None:
        parts = list(executor.map(_scan_chunk, *_columns(a, b, l, n, chunks)))
    else:
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_scan_chunk, *_columns(a, b, l, n, chunks)))
    sols = tuple(SolutionTuple(a, x, y, b, l, n) for part in parts for x, y in part)
    return SearchReport((a, b, l, n), y_max, sols, time.perf_counter() - start, len(chunks))


def _columns(a, b, l, n, chunks):
    k = len(chunks)
    return [a] * k, [b] * k, [l] * k, [n] * k, [c[0] for c in chunks], [c[1] for c in chunks]


# ---------------------------------------------------------------- corpus


@dataclass(frozen=True)
class CorpusEntry:
    """A raw corpus row; it may be malformed, verify_corpus reports why."""

    a: int
    x: int
    y: int
    b: int
    l: int
    n: int
    expect: str | None = None  # "congruent" | "composite" | None
    line: int | None = None

    def as_tuple(self) -> tuple[int, int, int, int, int, int]:
        return self.a, self.x, self.y, self.b, self.l, self.n


@dataclass(frozen=True)
class CorpusCheck:
    entry: CorpusEntry
    equation_holds: bool
    residues: tuple[int, int] | None
    b_kind: str
    failures: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def congruent(self) -> bool:
        """2^(n-1) b^l = +-1 (mod a) for some sign of b."""
        if self.residues is None:
            return False
        a = self.entry.a
        return any(r in (1 % a, (a - 1) % a) for r in self.residues)


def classify_b(b: int) -> str:
    if b == 0:
        return "zero"
    if abs(b) == 1:
        return "unit"
    if b % 2 == 0:
        return "even"
    return "prime_power" if odd_prime_power(b) is not None else "composite"


def verify_entry(entry: CorpusEntry) -> CorpusCheck:
    a, x, y, b, l, n = entry.as_tuple()
    failures = tuple_problems(a, x, y, b, l, n)
    holds = l >= 1 and n >= 0 and equation_holds(a, x, y, b, l, n)
    residues = congruence_residues(a, b, l, n) if a >= 1 and n >= 1 and l >= 0 else None
    check = CorpusCheck(entry, holds, residues, classify_b(b))
    if entry.expect == "congruent" and not check.congruent:
        failures.append("expected 2^(n-1) b^l = +-1 (mod a)")
    elif entry.expect == "composite":
        if check.b_kind != "composite":
            failures.append("expected b with two or more odd prime factors")
        if check.congruent:
            failures.append("expected 2^(n-1) b^l != +-1 (mod a)")
    return CorpusCheck(entry, holds, residues, check.b_kind, tuple(failures))


def verify_corpus(entries: Iterable[CorpusEntry]) -> list[CorpusCheck]:
    """Check every entry; failures are collected, never raised."""
    return [verify_entry(e) for e in entries]


def parse_corpus(text: str, expect: str | None = None) -> list[CorpusEntry]:
    """Parse the TSV corpus format: ``a x y b l n`` per line, ``#`` comments."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols = line.split()
        if len(cols) != 6:
            raise ValueError(f"line {lineno}: expected 6 columns, got {len(cols)}")
        try:
            values = [int(c) for c in cols]
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer column") from None
        entries.append(CorpusEntry(*values, expect=expect, line=lineno))
    return entries


def read_corpus(path: str | Path) -> list[CorpusEntry]:
    return parse_corpus(Path(path).read_text(encoding="ascii"))


def format_corpus(entries: Iterable[CorpusEntry | SolutionTuple]) -> str:
    return "".join("\t".join(str(c) for c in e.as_tuple()) + "\n" for e in entries)


def published_corpus() -> list[CorpusEntry]:
    """The fourteen published tuples with their expected category.

    The first ten satisfy the congruence 2^(n-1) b^l = +-1 (mod a); the last
    four have b with at least two odd prime factors and fail it.
    """
    text = resources.files("llnsolve").joinpath("data/published_corpus.tsv").read_text("ascii")
    rows = parse_corpus(text)
    return [
        CorpusEntry(*e.as_tuple(), expect="congruent" if i < 10 else "composite", line=e.line)
        for i, e in enumerate(rows)
    ]
