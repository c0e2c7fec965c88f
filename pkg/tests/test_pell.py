import pytest
from hypothesis import given, settings, strategies as st

from llnsolve import pell
from llnsolve.arith import as_square, isqrt
from llnsolve.pell import PellForm


VMAX = 20000


def brute_minimal(D, N, vmax=VMAX):
    for v in range(1, vmax):
        u = as_square(D * v * v + N)
        if u is not None and u > 0:
            return u, v
    return None


NON_SQUARES = [d for d in range(2, 101) if isqrt(d) ** 2 != d]


@pytest.mark.parametrize("D", NON_SQUARES)
def test_fundamental_against_brute_force(D):
    for N in pell.ALLOWED_N:
        s = pell.fundamental_solution(PellForm(D, N))
        brute = brute_minimal(D, N, VMAX if s is None else min(s.v + 1, VMAX))
        if s is None or s.v >= VMAX:
            # brute force can only confirm nothing smaller exists
            assert brute is None, (D, N)
        else:
            assert (s.u, s.v) == brute, (D, N)


def test_minimal_and_odd_solutions():
    assert (lambda s: (s.u, s.v))(pell.fundamental_solution(PellForm(21, 4))) == (5, 1)
    assert (lambda s: (s.u, s.v))(pell.fundamental_solution(PellForm(21, 1))) == (55, 12)
    assert pell.fundamental_solution(PellForm(3, -1)) is None
    odd = pell.odd_solutions(PellForm(21, 4), 3)
    assert [(s.u, s.v) for s in odd] == [(5, 1), (23, 5), (527, 115)]
    assert [s.index for s in odd] == [1, 2, 4]
    assert not odd.truncated


def test_odd_solutions_truncated():
    got = pell.odd_solutions(PellForm(21, 4), 5, patience=1)
    assert got.truncated and len(got) < 5


def test_invalid_forms():
    for D, N in [(4, 1), (1, 1), (21, 2), (0, 1)]:
        with pytest.raises(ValueError):
            PellForm(D, N)
    with pytest.raises(ValueError):
        pell.PellSolution(5, 2, PellForm(21, 4))
    with pytest.raises(ValueError):
        pell.odd_solutions(PellForm(3, -1), 1)


def test_cf_expansion():
    assert pell.cf_expansion(21) == (4, [1, 1, 2, 1, 1, 8])
    assert pell.cf_expansion(2) == (1, [2])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(NON_SQUARES), st.sampled_from(pell.ALLOWED_N))
def test_iterates_satisfy_form_and_grow(D, N):
    form = PellForm(D, N)
    sols = [s for _, s in zip(range(8), pell.iter_solutions(form))]
    for s in sols:
        assert s.u * s.u - D * s.v * s.v == N
    vs = [s.v for s in sols]
    assert vs == sorted(vs) and len(set(vs)) == len(vs)
    assert [s.index for s in sols] == list(range(1, len(sols) + 1))


def test_iterates_are_all_solutions():
    # every solution with v below a bound is hit by the orbit
    for D in (13, 21, 29, 34, 52, 85):
        for N in pell.ALLOWED_N:
            form = PellForm(D, N)
            brute = {v for v in range(1, 5000) if as_square(D * v * v + N)}
            orbit = set()
            for s in pell.iter_solutions(form):
                if s.v >= 5000:
                    break
                orbit.add(s.v)
            assert orbit == brute, (D, N)


def test_start_zero():
    first = next(pell.iter_solutions(PellForm(21, 4), start=0))
    assert (first.u, first.v, first.index) == (2, 0, 0)
    with pytest.raises(ValueError):
        next(pell.iter_solutions(PellForm(21, -4), start=0))


def test_form734():
    sols = pell.form734_solutions(4)
    assert sols == [(1, 1), (91, 139), (-19, -29), (10009, 15289)]
    for v, u in pell.form734_solutions(12):
        assert 7 * v * v - 3 * u * u == 4 and u % 2 and v % 2
    for v, u in pell.form734_parametrizations(55, 12):
        assert 7 * v * v - 3 * u * u == 4


def test_documented_examples():
    assert pell.cf_expansion(3) == (1, [1, 2])
    assert pell.fundamental_solution(PellForm(21, -4)) is None
    s = pell.next_solution(pell.fundamental_solution(PellForm(21, 4)))
    assert (s.u, s.v) == (23, 5)
    s = pell.next_solution(s)
    assert (s.u, s.v) == (110, 24)
    s = pell.next_solution(pell.fundamental_solution(PellForm(21, 1)))
    assert (s.u, s.v) == (6049, 1320)
    # (21, 1) has no solution with u and v both odd
    got = pell.odd_solutions(PellForm(21, 1), 1)
    assert got == [] and got.truncated
