import pytest
from hypothesis import given, strategies as st

from llnsolve import linrec
from llnsolve.linrec import Kind


def naive(k):
    F, L = [0, 1], [2, 1]
    for _ in range(k):
        F.append(F[-1] + F[-2])
        L.append(L[-1] + L[-2])
    return F[k], L[k]


def test_fast_doubling_matches_recurrence():
    for k in range(400):
        p = linrec.fib_lucas(k)
        assert (p.F, p.L) == naive(k)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        linrec.fib(-1)


@given(st.integers(min_value=1, max_value=2000))
def test_cassini_and_lucas_identity(k):
    F, L = linrec.fib, linrec.lucas
    assert F(k - 1) * F(k + 1) - F(k) ** 2 == (-1) ** k
    assert L(k) ** 2 - 5 * F(k) ** 2 == 4 * (-1) ** k


def test_scans():
    assert linrec.square_scan(Kind.FIB, 200) == [0, 1, 2, 12]
    assert linrec.square_scan("lucas", 200) == [1, 3]
    assert linrec.five_fib_square_scan(200) == [0, 5]
    assert linrec.adjacent_sum_square_scan(200) == [(4, -1)]
    with pytest.raises(ValueError):
        linrec.square_scan(Kind.FIB, 1)


def test_documented_examples():
    assert linrec.fib_lucas(12).F == 144
    assert linrec.fib_lucas(3).L == 4
    assert (linrec.fib_lucas(0).F, linrec.fib_lucas(0).L) == (0, 2)
    assert linrec.square_scan(Kind.FIB, 2) == [0, 1, 2]
    assert linrec.five_fib_square_scan(4) == [0]
    assert linrec.five_fib_square_scan(5) == [0, 5]
    assert linrec.adjacent_sum_square_scan(4) == [(4, -1)]
    assert linrec.adjacent_sum_square_scan(3) == []
