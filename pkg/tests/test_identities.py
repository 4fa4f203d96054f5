from fractions import Fraction
from math import comb

import pytest

from hypercatalan.closedform import geode_consecutive_closed
from hypercatalan.errors import DegenerateTerm, DomainError
from hypercatalan.identities import (
    binomial_family_check,
    binomial_family_rhs,
    gbinom,
    unusual_identity_check,
    unusual_identity_rhs,
)
from hypercatalan.recurrence import two_shape_alternating_sum


def test_t1_example():
    # 6 (5/4 - 15/56 + 1/56)
    assert 6 * (Fraction(5, 4) - Fraction(15, 56) + Fraction(1, 56)) == 6
    assert binomial_family_rhs(4, 2, 1) == 6
    assert binomial_family_check(4, 2, 1)


def test_t100_example():
    partial = Fraction(10, 503) - Fraction(1245, 126253) + Fraction(41251, 21084251)
    assert 501 * partial == 6
    assert binomial_family_rhs(4, 2, 100) == 6


@pytest.mark.parametrize("n,t", [(0, 1), (5, 2), (9, 7)])
def test_k_zero(n, t):
    assert binomial_family_rhs(n, 0, t) == 1


def test_family_sweep():
    for t in range(1, 6):
        for n in range(13):
            for k in range(n + 1):
                assert binomial_family_check(n, k, t), (n, k, t)


def test_unusual():
    assert unusual_identity_check(4, 2)
    for s in range(13):
        assert unusual_identity_rhs(s, 0) == 1
        for n in range(s + 1):
            assert unusual_identity_check(s, n)
            assert unusual_identity_rhs(s, n) == binomial_family_rhs(s, n, 2)


def test_derivation_cross_check():
    for k in range(2, 6):
        for m in range(1, 6):
            for n in range(1, 6):
                assert two_shape_alternating_sum(k, k + 1, m, n) == geode_consecutive_closed(k, m, n)


def test_domain():
    with pytest.raises(DomainError):
        binomial_family_rhs(3, 4, 1)
    with pytest.raises(DomainError):
        binomial_family_rhs(3, 1, 0)
    with pytest.raises(DomainError):
        unusual_identity_rhs(2, 3)


def test_gbinom_falling_power():
    assert gbinom(5, 2) == 10
    assert gbinom(-1, 3) == -1
    assert gbinom(-3, 2) == 6
    assert gbinom(4, -1) == 0


def test_exploratory_mode_runs_or_flags_degenerate():
    # t <= 0 is evidence only; a zero denominator must surface, not be skipped.
    outcomes = {}
    for t in (0, -1, -2):
        for n in range(6):
            for k in range(n + 1):
                try:
                    outcomes[n, k, t] = binomial_family_rhs(n, k, t, exploratory=True) == comb(n, k)
                except DegenerateTerm:
                    outcomes[n, k, t] = "degenerate"
    degenerate = {key for key, v in outcomes.items() if v == "degenerate"}
    assert degenerate == {(n, n, -1) for n in range(6)}
    assert all(v is True for key, v in outcomes.items() if key not in degenerate)
