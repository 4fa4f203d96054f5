"""Factorial-quotient closed forms for hyper-Catalan, Fuss-Catalan and Geode values."""

from __future__ import annotations

from functools import lru_cache
from math import factorial, prod

from .errors import DomainError, IntegrityError
from .typevec import TypeVec

__all__ = [
    "hyper_catalan",
    "fuss_catalan_power",
    "fuss_number",
    "catalan",
    "geode_bitri_closed",
    "geode_consecutive_closed",
]


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegrityError(f"{what}: {num} not divisible by {den}")
    return q


@lru_cache(maxsize=None)
def fuss_catalan_power(m: TypeVec, r: int) -> int:
    """``[t^m] S^r`` via ``r (r-1 + sum k m_k)! / ((r + sum (k-1) m_k)! prod m_k!)``."""
    if r < 1:
        raise DomainError(f"power must be >= 1, got {r}")
    top = r - 1 + sum(k * v for k, v in m)
    bottom = r + sum((k - 1) * v for k, v in m)
    den = factorial(bottom) * prod(factorial(v) for _, v in m)
    return _exact_div(r * factorial(top), den, f"C^({r}){m}")


def hyper_catalan(m: TypeVec) -> int:
    """Number of subdigons of type ``m``.

    >>> hyper_catalan(TypeVec.parse("1,0,2"))
    45
    """
    return fuss_catalan_power(m, 1)


def fuss_number(k: int, m: int) -> int:
    """Subdivisions of a roofed polygon into ``m`` copies of a ``(k+1)``-gon."""
    if k < 2 or m < 0:
        raise DomainError(f"fuss_number needs k >= 2, m >= 0 (got {k}, {m})")
    return hyper_catalan(TypeVec.single(k, m))


def catalan(n: int) -> int:
    return fuss_number(2, n)


def geode_bitri_closed(m: int, n: int) -> int:
    """``G[m, n]`` for m triangles and n quadrilaterals."""
    if m < 0 or n < 0:
        raise DomainError("negative index")
    num = factorial(2 * m + 3 * n + 3)
    den = (2 * m + 2 * n + 3) * (m + n + 1) * factorial(m + 2 * n + 2) * factorial(m) * factorial(n)
    return _exact_div(num, den, f"H({m},{n})")


def geode_consecutive_closed(k: int, m: int, n: int) -> int:
    """``G(m k + n (k+1))``: m central (k+1)-gons and n central (k+2)-gons."""
    if k < 2 or m < 0 or n < 0:
        raise DomainError(f"bad arguments ({k}, {m}, {n})")
    num = factorial(k * m + (k + 1) * (n + 1))
    den = (
        (k * (m + n + 1) + 1)
        * (m + n + 1)
        * factorial((k - 1) * m + k * (n + 1))
        * factorial(m)
        * factorial(n)
    )
    return _exact_div(num, den, f"H({k},{m},{n})")
