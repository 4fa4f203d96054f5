"""Exact rational checks of two binomial-coefficient identities obtained from Geode closed forms."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .errors import DegenerateTerm, DomainError

__all__ = [
    "gbinom",
    "binomial_family_rhs",
    "binomial_family_check",
    "unusual_identity_rhs",
    "unusual_identity_check",
]


def gbinom(top: int, i: int) -> int:
    """Binomial coefficient with any integer top, via the falling power ``top^(i) / i!``."""
    if i < 0:
        return 0
    if top >= 0:
        return comb(top, i)
    falling = 1
    for step in range(i):
        falling *= top - step
    return falling // factorial(i)


def _alternating(scale: int, upper: int, left_top: int, right_top: int, den_top: int) -> Fraction:
    total = Fraction(0)
    for i in range(upper + 1):
        den = (i + 1) * gbinom(den_top, i + 1)
        if den == 0:
            raise DegenerateTerm(f"zero denominator at i={i}")
        num = gbinom(left_top, i) * gbinom(right_top, upper - i)
        total += Fraction((-1) ** i * num, den)
    return scale * total


def binomial_family_rhs(n: int, k: int, t: int, exploratory: bool = False) -> Fraction:
    """``(t+1+tn) sum_i (-1)^i C(t+(t-1)n+k, i) C(n+1, k-i) / ((i+1) C(t+1+tn+k, i+1))``."""
    if not 0 <= k <= n:
        raise DomainError(f"need 0 <= k <= n, got k={k}, n={n}")
    if t < 1 and not exploratory:
        raise DomainError(f"t={t} < 1 is only allowed in exploratory mode")
    return _alternating(
        scale=t + 1 + t * n,
        upper=k,
        left_top=t + (t - 1) * n + k,
        right_top=n + 1,
        den_top=t + 1 + t * n + k,
    )


def binomial_family_check(n: int, k: int, t: int, exploratory: bool = False) -> bool:
    return binomial_family_rhs(n, k, t, exploratory) == comb(n, k)


def unusual_identity_rhs(s: int, n: int) -> Fraction:
    """``(3+2s) sum_i (-1)^i C(2+s+n, i) C(s+1, n-i) / ((i+1) C(3+2s+n, i+1))``."""
    if not 0 <= n <= s:
        raise DomainError(f"need 0 <= n <= s, got n={n}, s={s}")
    total = Fraction(0)
    for i in range(n + 1):
        den = (i + 1) * comb(3 + 2 * s + n, i + 1)
        if den == 0:
            raise DegenerateTerm(f"zero denominator at i={i}")
        total += Fraction((-1) ** i * comb(2 + s + n, i) * comb(s + 1, n - i), den)
    return (3 + 2 * s) * total


def unusual_identity_check(s: int, n: int) -> bool:
    return unusual_identity_rhs(s, n) == comb(s, n)
