import math

import pytest

from hypercatalan.errors import DomainError
from hypercatalan.numroot import evaluate_truncated_s, residual_norm

from oracles import bisect_root, catalan_float_partial


def quadratic_root(c2):
    """Smaller positive root of 1 - a + c2 a^2."""
    return (1 - math.sqrt(1 - 4 * c2)) / (2 * c2)


def test_zero_coefficients():
    ev = evaluate_truncated_s([], 10)
    assert ev.value == 1.0 and ev.converged
    assert evaluate_truncated_s([0.0, 0.0], 10).value == 1.0


def test_partial_sum_matches_catalan_oracle():
    for c2 in (0.05, 0.1, 0.2):
        assert evaluate_truncated_s([c2], 20).value == pytest.approx(catalan_float_partial(c2, 20), rel=1e-14)


@pytest.mark.parametrize("c2,levels", [(0.05, 30), (0.1, 30), (0.15, 40)])
def test_quadratic_convergent(c2, levels):
    ev = evaluate_truncated_s([c2], levels)
    alpha = quadratic_root(c2)
    assert abs(ev.value - alpha) < 1e-6
    assert residual_norm([c2], ev.value) < 1e-8
    assert not ev.diverging


def test_quadratic_near_boundary_tail():
    # c2 = 0.2 has ratio 4 c2 = 0.8; the tail after 30 levels is still ~1e-5.
    ev = evaluate_truncated_s([0.2], 30)
    alpha = quadratic_root(0.2)
    assert alpha == pytest.approx(1.3819660113, abs=1e-10)
    assert 0 < alpha - ev.value < 1e-4
    assert ev.increments[-1] < ev.increments[-2]
    assert abs(evaluate_truncated_s([0.2], 80).value - alpha) < 1e-6


def test_cubic_against_bisection():
    c = [0.05, 0.02]
    ev = evaluate_truncated_s(c, 25)
    root = bisect_root(lambda a: 1 - a + c[0] * a**2 + c[1] * a**3, 1.0, 1.5)
    assert abs(ev.value - root) < 1e-9
    assert residual_norm(c, ev.value) < 1e-9


def test_negative_coefficient():
    ev = evaluate_truncated_s([-0.1], 40)
    assert abs(ev.value - (1 - math.sqrt(1.4)) / (-0.2)) < 1e-10


def test_divergence_flag():
    ev = evaluate_truncated_s([0.3], 25)
    assert ev.diverging
    assert not ev.converged
    assert not evaluate_truncated_s([0.1], 25).diverging


def test_residual_norm():
    assert residual_norm([], 1.0) == 0.0
    assert residual_norm([0.25], 2.0) == pytest.approx(0.0)
    assert residual_norm([0.1], 1.0) == pytest.approx(0.1)


def test_domain():
    with pytest.raises(DomainError):
        evaluate_truncated_s([0.1], -1)
    with pytest.raises(DomainError):
        evaluate_truncated_s([math.nan], 3)


def test_increment_count():
    ev = evaluate_truncated_s([0.1, 0.01], 6)
    assert ev.levels == 6 and len(ev.increments) == 7
