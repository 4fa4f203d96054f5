"""The Geode ``G`` (``S - 1 = S1 G``) and the auxiliary arrays ``U = 1 - 1/S`` and ``H = U / S1``.

Everything uses the convention that variables start at ``t2``.  When S is
built to ``D`` faces, ``G`` and ``H`` are known to ``D - 1`` faces.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import DomainError, IntegrityError
from .series import PolySeries, Truncation, build_s, divide_by_s1, inverse, substitute_monomial
from .typevec import TypeVec

__all__ = [
    "build_g",
    "build_u",
    "build_h",
    "h_inverse_series",
    "geode_coefficient",
    "alternating_geode_eval",
    "zero_sum_geode_eval",
    "geometric_coefficients",
]


def _require_natural(p: PolySeries, name: str) -> PolySeries:
    bad = [(m, c) for m, c in p.terms.items() if c < 0]
    if bad:
        m, c = min(bad)
        raise IntegrityError(f"{name} has negative coefficient {c} at {m}")
    return p


@lru_cache(maxsize=32)
def build_g(trunc: Truncation) -> PolySeries:
    """``(S - 1) / S1``, exact; truncated to ``trunc.max_faces - 1`` faces."""
    if trunc.max_faces < 1:
        raise DomainError("building G needs max_faces >= 1")
    s = build_s(trunc)
    return divide_by_s1(s - PolySeries.one(trunc))


@lru_cache(maxsize=32)
def build_u(trunc: Truncation) -> PolySeries:
    u = PolySeries.one(trunc) - inverse(build_s(trunc))
    return _require_natural(u, "U")


@lru_cache(maxsize=32)
def build_h(trunc: Truncation) -> PolySeries:
    if trunc.max_faces < 1:
        raise DomainError("building H needs max_faces >= 1")
    return _require_natural(divide_by_s1(build_u(trunc)), "H")


def h_inverse_series(trunc: Truncation) -> PolySeries:
    """``1 - sum_n t_n (S + S^2 + ... + S^(n-1))``, which should invert H."""
    s = build_s(trunc)
    acc = PolySeries.one(trunc)
    power = PolySeries.one(trunc)
    partial = PolySeries.zero(trunc)
    for n in range(2, trunc.max_gon + 1):
        power = power * s
        partial = partial + power
        acc = acc - PolySeries.monomial(trunc, TypeVec.single(n)) * partial
    return acc


def geode_coefficient(m: TypeVec) -> int:
    """``G_m`` by series division at the smallest truncation containing ``m``."""
    trunc = Truncation(m.faces + 1, max(m.max_gon, 2))
    return build_g(trunc).coeff(m)


def _f_coefficients(g: PolySeries, values: dict[int, int], degree: int) -> list[int]:
    rule = {k: (c, (1,)) for k, c in values.items()}
    collected = substitute_monomial(g, rule)
    return [collected.get((d,), 0) for d in range(degree + 1)]


def alternating_geode_eval(k_pairs: int, degree: int) -> list[int]:
    """f-coefficients of ``G[-f, f, ..., -f, f]`` with ``2 k_pairs`` parameters, up to ``f^degree``."""
    if k_pairs < 1:
        raise DomainError("need at least one pair")
    values = {k: (-1 if k % 2 == 0 else 1) for k in range(2, 2 * k_pairs + 2)}
    g = build_g(Truncation(degree + 1, 2 * k_pairs + 1))
    return _f_coefficients(g, values, degree)


def zero_sum_geode_eval(c: list[int], degree: int) -> list[int]:
    """f-coefficients of ``G[c2 f, c3 f, ...]`` for integer weights summing to zero."""
    if len(c) < 1:
        raise DomainError("empty weight list")
    if sum(c) != 0:
        raise DomainError(f"weights must sum to zero, got {sum(c)}")
    values = dict(enumerate(c, start=2))
    g = build_g(Truncation(degree + 1, max(len(c) + 1, 2)))
    return _f_coefficients(g, values, degree)


def geometric_coefficients(ratio: int, degree: int) -> list[int]:
    """Coefficients of ``1 / (1 - ratio f)``: the expected side of both evaluations."""
    return [ratio**n for n in range(degree + 1)]
