import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from plumbtree.contfrac import (
    ContFracError,
    apply_word,
    eval_cf,
    expand_cf,
    gr_reduce,
    gr_step_left,
    gr_step_right,
    is_gpq_value,
    reversed_value,
)

cfs = st.lists(st.integers(2, 9), min_size=1, max_size=8)


@pytest.mark.parametrize("cf, value", [([4], 4), ([2], 2), ([3, 5, 2], Fraction(25, 9)),
                                       ([2, 2], Fraction(3, 2)), ([2, 5], Fraction(9, 5))])
def test_eval_and_expand(cf, value):
    assert eval_cf(cf) == value
    assert expand_cf(value) == cf


def test_expand_rejects_small():
    with pytest.raises(ContFracError):
        expand_cf(1)
    with pytest.raises(ContFracError):
        eval_cf([1, 3])


@given(cfs)
def test_expand_eval_roundtrip(cf):
    assert expand_cf(eval_cf(cf)) == cf


@given(st.integers(2, 500), st.integers(1, 499))
def test_eval_expand_roundtrip(p, q):
    r = Fraction(p, q)
    if r > 1:
        assert eval_cf(expand_cf(r)) == r


def test_reversed_value():
    assert reversed_value([3, 5, 2]) == Fraction(25, 14)
    assert (9 * 14) % 25 == 1
    assert reversed_value([2, 2]) == Fraction(3, 2)


def test_reversal_congruence_random():
    rng = random.Random(11)
    for _ in range(200):
        cf = [rng.randint(2, 7) for _ in range(rng.randint(1, 7))]
        u = eval_cf(cf)
        back = reversed_value(cf)
        assert back.numerator == u.numerator
        assert u.numerator == 1 or (u.denominator * back.denominator) % u.numerator == 1


@pytest.mark.parametrize("r, expected", [(4, (2, 1)), (Fraction(9, 5), (3, 2)), (Fraction(7, 3), None),
                                         (Fraction(9, 2), (3, 1)), (Fraction(3, 2), None)])
def test_is_gpq_value(r, expected):
    assert is_gpq_value(r) == expected


def test_steps():
    assert gr_step_left([4]) == [2, 5]
    assert gr_step_right([4]) == [5, 2]
    assert gr_step_left(gr_step_left([4])) == [2, 2, 6]
    assert eval_cf([2, 5]) == Fraction(9, 5)
    assert is_gpq_value(eval_cf([5, 2])) is not None
    assert is_gpq_value(eval_cf([2, 2, 6])) is not None


def test_step_identities():
    # a step from p^2/(pq-1) lands on P^2/(PQ-1) with P = p + q or P = 2p - q
    # (the two choices of q for the same chain, read from either end)
    for p in range(2, 14):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            cf = expand_cf(Fraction(p * p, p * q - 1))
            left = eval_cf(gr_step_left(cf))
            right = eval_cf(gr_step_right(cf))
            for value in (left, right):
                hit = is_gpq_value(value)
                assert hit is not None
                assert hit[0] in (p + q, 2 * p - q)
            assert {is_gpq_value(left)[0], is_gpq_value(right)[0]} == {p + q, 2 * p - q}


def test_reduce_is_inverse():
    assert gr_reduce([4]) == []
    assert gr_reduce([2, 2]) is None
    for word in (["L"], ["R", "L", "L"], ["L", "R", "R", "L"]):
        assert gr_reduce(apply_word(word)) == word
