"""Named verification suites; each returns one :class:`Case` per checked item."""

from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import dataclass

from .closedform import fuss_catalan_power, fuss_number, geode_bitri_closed, geode_consecutive_closed, hyper_catalan
from .geode import (
    alternating_geode_eval,
    build_g,
    build_h,
    build_u,
    geometric_coefficients,
    h_inverse_series,
    zero_sum_geode_eval,
)
from .identities import binomial_family_check, unusual_identity_check
from .oracle import enumerate_subdigons
from .recurrence import (
    GeodeRecurrence,
    LargestComponent,
    catalan_convolution_check,
    hyper_catalan_recurrence,
    lesser_sum_check,
    two_shape_alternating_sum,
)
from .series import Method, PolySeries, Truncation, build_s, residual_geometric
from .typevec import TypeVec

__all__ = ["Case", "Bounds", "SUITES", "run_suite"]


@dataclass(frozen=True)
class Case:
    name: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got


@dataclass(frozen=True)
class Bounds:
    faces: int = 5
    gons: int = 5
    n_max: int = 12
    t_max: int = 5
    power_max: int = 4
    catalan_max: int = 15


def _nonempty(trunc: Truncation) -> Iterator[TypeVec]:
    return (m for m in trunc.types() if m)


def suite_recurrence(b: Bounds) -> Iterator[Case]:
    memo: dict[TypeVec, int] = {}
    for m in Truncation(b.faces, b.gons).types():
        yield Case(f"C{m}", hyper_catalan(m), hyper_catalan_recurrence(m, memo))


def suite_enumeration(b: Bounds) -> Iterator[Case]:
    counts = enumerate_subdigons(b.faces, b.gons)
    for m in Truncation(b.faces, b.gons).types():
        yield Case(f"C{m}", hyper_catalan(m), counts.get(m, 0))


def suite_lesser_sum(b: Bounds) -> Iterator[Case]:
    g = build_g(Truncation(b.faces, b.gons))
    for m in _nonempty(Truncation(b.faces, b.gons)):
        yield Case(f"C{m}=sum G(lessers)", True, lesser_sum_check(m, g.coeff))


def suite_division_vs_recurrence(b: Bounds) -> Iterator[Case]:
    trunc = Truncation(b.faces + 1, b.gons)
    g = build_g(trunc)
    session = GeodeRecurrence(LargestComponent())
    for m in g.trunc.types():
        yield Case(f"G{m}", g.coeff(m), session.value(m))


def suite_raney(b: Bounds) -> Iterator[Case]:
    trunc = Truncation(b.faces, b.gons)
    s = build_s(trunc)
    power = PolySeries.one(trunc)
    for r in range(1, b.power_max + 1):
        power = power * s
        for m in trunc.types():
            yield Case(f"C^({r}){m}", fuss_catalan_power(m, r), power.coeff(m))


def suite_convolution(b: Bounds) -> Iterator[Case]:
    for m in range(b.catalan_max + 1):
        yield Case(f"convolution m<={m}", True, catalan_convolution_check(m))


def suite_residual(b: Bounds) -> Iterator[Case]:
    for d in range(b.faces + 1):
        for k in range(2, b.gons + 1):
            trunc = Truncation(d, k)
            closed = build_s(trunc)
            yield Case(f"residual S{trunc}", True, residual_geometric(closed).is_zero())
            yield Case(f"fixed point S{trunc}", closed, build_s(trunc, Method.FIXED_POINT))


def suite_closed_forms(b: Bounds) -> Iterator[Case]:
    g = build_g(Truncation(b.faces + 1, b.gons))
    for m in g.trunc.types():
        items = m.items()
        if len(items) == 1:
            (k, v), = items
            yield Case(f"G{m} single shape", fuss_number(k, v + 1), g.coeff(m))
        elif len(items) == 2:
            (j, a), (k, c) = items
            if (j, k) == (2, 3):
                yield Case(f"G{m} bi-tri", geode_bitri_closed(a, c), g.coeff(m))
            if k == j + 1:
                yield Case(f"G{m} consecutive", geode_consecutive_closed(j, a, c), g.coeff(m))
            yield Case(f"G{m} alternating", two_shape_alternating_sum(j, k, a, c), g.coeff(m))
            yield Case(f"G{m} alternating swapped", two_shape_alternating_sum(k, j, c, a), g.coeff(m))


def suite_identities(b: Bounds) -> Iterator[Case]:
    for t in range(1, b.t_max + 1):
        for n in range(b.n_max + 1):
            for k in range(n + 1):
                yield Case(f"family n={n} k={k} t={t}", True, binomial_family_check(n, k, t))
    for s in range(b.n_max + 1):
        for n in range(s + 1):
            yield Case(f"unusual s={s} n={n}", binomial_family_check(s, n, 2), unusual_identity_check(s, n))


def suite_gessel(b: Bounds) -> Iterator[Case]:
    trunc = Truncation(b.faces + 1, b.gons)
    s, g, u, h = build_s(trunc), build_g(trunc), build_u(trunc), build_h(trunc)
    low = h.trunc
    yield Case("U natural", True, all(c >= 0 for c in u.terms.values()))
    yield Case("H natural", True, all(c >= 0 for c in h.terms.values()))
    yield Case("H*S = G", g, h * s.restrict(low))
    yield Case("H*S1 = U", u.restrict(low), h * PolySeries.s1(low))
    yield Case("H * H^-1 = 1", PolySeries.one(low), h * h_inverse_series(trunc).restrict(low))
    for k in range(1, 4):
        yield Case(f"G[-f,f]x{k}", geometric_coefficients(k, 8), alternating_geode_eval(k, 8))
    yield Case("G[f,-f]", geometric_coefficients(-1, 8), zero_sum_geode_eval([1, -1], 8))


SUITES: dict[str, Callable[[Bounds], Iterator[Case]]] = {
    "recurrence": suite_recurrence,
    "enumeration": suite_enumeration,
    "lesser-sum": suite_lesser_sum,
    "division-vs-recurrence": suite_division_vs_recurrence,
    "raney": suite_raney,
    "convolution": suite_convolution,
    "residual": suite_residual,
    "closed-forms": suite_closed_forms,
    "identities": suite_identities,
    "gessel": suite_gessel,
}


def run_suite(name: str, bounds: Bounds | None = None) -> list[Case]:
    return list(SUITES[name](bounds or Bounds()))
