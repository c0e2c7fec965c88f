import pytest

from llnsolve import classnum
from llnsolve.arith import is_prime, is_squarefree


def test_known_values():
    assert classnum.class_number(23).h == 3
    assert classnum.class_number(5).h == 2
    assert classnum.class_number(163).h == 1
    assert classnum.class_number(23).discriminant == -23
    assert classnum.class_number(5).discriminant == -20


def test_rejects_non_squarefree():
    with pytest.raises(ValueError):
        classnum.class_number(12)
    with pytest.raises(ValueError):
        classnum.class_number(0)


def test_reduced_forms_shape():
    forms = classnum.reduced_forms(-23)
    assert forms == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]
    for a, b, c in classnum.reduced_forms(-4 * 1155):
        assert abs(b) <= a <= c
        assert b * b - 4 * a * c == -4 * 1155


def test_two_enumerations_agree():
    counts = classnum.form_counts(4 * 2000)
    for a in range(1, 2001):
        if is_squarefree(a):
            d = classnum.field_discriminant(a)
            assert len(classnum.reduced_forms(d)) == counts[-d], a


def test_form_counts_read_only():
    with pytest.raises(ValueError):
        classnum.form_counts(100)[3] = 7


def test_h_below_a():
    for a, h in classnum.class_numbers_upto(10**4).items():
        if a >= 5:
            assert 1 <= h < a


def test_class_number_one_primes():
    h = classnum.class_numbers_upto(10**4)
    ones = {p for p in range(3, 10**4, 4) if is_prime(p) and h[p] == 1}
    assert ones == {3, 7, 11, 19, 43, 67, 163}
    assert set(classnum.SPECIAL_SET) == ones - {3}


def test_tally_validates():
    with pytest.raises(ValueError):
        classnum.tally_class_numbers(1, 0)
