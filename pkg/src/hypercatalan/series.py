"""Truncated sparse multivariate power series in ``t2, t3, ...`` with integer coefficients.

A :class:`Truncation` bounds both the number of faces (total degree) and the
largest variable index.  Every binary operation insists on identical
truncations; restricting to a smaller one is always explicit.
"""

from __future__ import annotations

import heapq
import json
from collections import defaultdict
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations_with_replacement
from math import prod
from types import MappingProxyType

from .closedform import hyper_catalan
from .errors import DomainError, NotDivisible, TruncationMismatch
from .typevec import TypeVec

__all__ = [
    "Truncation",
    "PolySeries",
    "Method",
    "build_s",
    "residual_geometric",
    "inverse",
    "divide_by_s1",
    "substitute_monomial",
]


@dataclass(frozen=True)
class Truncation:
    max_faces: int
    max_gon: int

    def __post_init__(self):
        if self.max_faces < 0:
            raise DomainError(f"max_faces must be >= 0, got {self.max_faces}")
        if self.max_gon < 2:
            raise DomainError(f"max_gon must be >= 2, got {self.max_gon}")

    def contains(self, m: TypeVec) -> bool:
        return m.faces <= self.max_faces and m.max_gon <= self.max_gon

    def level_types(self, d: int) -> list[TypeVec]:
        """All inside types with exactly ``d`` faces, in display order."""
        if d < 0 or d > self.max_faces:
            return []
        out = [
            TypeVec((k, 1) for k in combo)
            for combo in combinations_with_replacement(range(2, self.max_gon + 1), d)
        ]
        return sorted(out)

    def types(self) -> Iterator[TypeVec]:
        for d in range(self.max_faces + 1):
            yield from self.level_types(d)

    def lower(self, faces: int = 1) -> Truncation:
        return Truncation(self.max_faces - faces, self.max_gon)

    def __str__(self) -> str:
        return f"(faces<={self.max_faces}, gons<={self.max_gon})"


class PolySeries:
    """Immutable map from inside types to nonzero integers."""

    __slots__ = ("trunc", "_terms")

    def __init__(self, trunc: Truncation, terms: Mapping[TypeVec, int] | None = None):
        self.trunc = trunc
        clean = {}
        if terms:
            for m, c in terms.items():
                if c and trunc.contains(m):
                    clean[m] = int(c)
        self._terms = clean

    # constructors -----------------------------------------------------------

    @classmethod
    def zero(cls, trunc: Truncation) -> PolySeries:
        return cls(trunc)

    @classmethod
    def one(cls, trunc: Truncation) -> PolySeries:
        return cls(trunc, {TypeVec(): 1})

    @classmethod
    def monomial(cls, trunc: Truncation, m: TypeVec, coeff: int = 1) -> PolySeries:
        return cls(trunc, {m: coeff})

    @classmethod
    def s1(cls, trunc: Truncation) -> PolySeries:
        """``t2 + t3 + ... + tK``."""
        return cls(trunc, {TypeVec.single(k): 1 for k in range(2, trunc.max_gon + 1)})

    # access -----------------------------------------------------------------

    @property
    def terms(self) -> Mapping[TypeVec, int]:
        return MappingProxyType(self._terms)

    def coeff(self, m: TypeVec) -> int:
        return self._terms.get(m, 0)

    __getitem__ = coeff

    def __iter__(self) -> Iterator[TypeVec]:
        return iter(sorted(self._terms))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def level(self, d: int) -> PolySeries:
        return PolySeries(self.trunc, {m: c for m, c in self._terms.items() if m.faces == d})

    def levels(self) -> dict[int, dict[TypeVec, int]]:
        out: dict[int, dict[TypeVec, int]] = defaultdict(dict)
        for m, c in self._terms.items():
            out[m.faces][m] = c
        return dict(out)

    def restrict(self, trunc: Truncation) -> PolySeries:
        """Re-truncate to a coarser (or equal) truncation."""
        if trunc.max_faces > self.trunc.max_faces or trunc.max_gon > self.trunc.max_gon:
            raise TruncationMismatch(f"cannot widen {self.trunc} to {trunc}")
        return PolySeries(trunc, self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolySeries):
            return NotImplemented
        return self.trunc == other.trunc and self._terms == other._terms

    def __repr__(self) -> str:
        return f"PolySeries({self.trunc}, {format_series(self)})"

    # ring operations --------------------------------------------------------

    def _check(self, other: PolySeries) -> None:
        if self.trunc != other.trunc:
            raise TruncationMismatch(f"{self.trunc} vs {other.trunc}")

    def __add__(self, other: PolySeries) -> PolySeries:
        self._check(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return PolySeries(self.trunc, out)

    def __neg__(self) -> PolySeries:
        return self.scale(-1)

    def __sub__(self, other: PolySeries) -> PolySeries:
        return self + (-other)

    def scale(self, c: int) -> PolySeries:
        return PolySeries(self.trunc, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other: PolySeries) -> PolySeries:
        self._check(other)
        top = self.trunc.max_faces
        right = _by_level(other._terms)
        out: dict[TypeVec, int] = defaultdict(int)
        for a, ca in self._terms.items():
            room = top - a.faces
            for d, bucket in right.items():
                if d > room:
                    continue
                for b, cb in bucket:
                    out[a + b] += ca * cb
        return PolySeries(self.trunc, out)

    def pow(self, r: int) -> PolySeries:
        if r < 0:
            raise DomainError("negative power; use inverse()")
        result = PolySeries.one(self.trunc)
        base = self
        while r:
            if r & 1:
                result = result * base
            r >>= 1
            if r:
                base = base * base
        return result

    __pow__ = pow

    def inverse(self) -> PolySeries:
        return inverse(self)

    def divide_by_s1(self) -> PolySeries:
        return divide_by_s1(self)

    # serialization ----------------------------------------------------------

    def to_records(self) -> list[dict]:
        return [{"type": m.dense(), "coeff": str(self._terms[m])} for m in self]

    def to_json(self, indent: int | None = None) -> str:
        return json.dumps(self.to_records(), indent=indent)

    @classmethod
    def from_json(cls, trunc: Truncation, text: str) -> PolySeries:
        return cls(trunc, {TypeVec.from_dense(r["type"]): int(r["coeff"]) for r in json.loads(text)})


def _by_level(terms: Mapping[TypeVec, int]) -> dict[int, list[tuple[TypeVec, int]]]:
    out: dict[int, list[tuple[TypeVec, int]]] = defaultdict(list)
    for m, c in terms.items():
        out[m.faces].append((m, c))
    return out


def format_series(p: PolySeries, var: str = "t") -> str:
    """Human-readable form such as ``1 + t2 + 2*t2^2``."""
    if p.is_zero():
        return "0"
    pieces = []
    for m in p:
        c = p.coeff(m)
        mono = "*".join(f"{var}{k}" + (f"^{v}" if v > 1 else "") for k, v in m)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    text = ("-" if first_sign == "-" else "") + first
    return text + "".join(f" {s} {b}" for s, b in pieces[1:])


class Method(str, Enum):
    CLOSED_FORM = "closed-form"
    FIXED_POINT = "fixed-point"


@lru_cache(maxsize=32)
def build_s(trunc: Truncation, method: Method = Method.CLOSED_FORM) -> PolySeries:
    """The hyper-Catalan generating series, truncated."""
    method = Method(method)
    if method is Method.CLOSED_FORM:
        return PolySeries(trunc, {m: hyper_catalan(m) for m in trunc.types()})
    # Each pass fixes one more face level, since t_k S^k raises the grade.
    s = PolySeries.one(trunc)
    for _ in range(trunc.max_faces + 1):
        nxt = _one_plus_sum_tk_powers(s)
        if nxt == s:
            break
        s = nxt
    return s


def _one_plus_sum_tk_powers(s: PolySeries) -> PolySeries:
    """``1 + sum_k t_k s^k``."""
    trunc = s.trunc
    acc = PolySeries.one(trunc)
    power = s
    for k in range(2, trunc.max_gon + 1):
        power = power * s
        acc = acc + PolySeries.monomial(trunc, TypeVec.single(k)) * power
    return acc


def residual_geometric(s: PolySeries) -> PolySeries:
    """``1 - s + sum_k t_k s^k``; zero exactly when ``s`` is the truncated S."""
    return _one_plus_sum_tk_powers(s) - s


def inverse(a: PolySeries) -> PolySeries:
    """Multiplicative inverse, built level by level; the constant term must be 1."""
    if a.coeff(TypeVec()) != 1:
        raise DomainError(f"inverse needs constant term 1, got {a.coeff(TypeVec())}")
    trunc = a.trunc
    a_levels = {d: list(b.items()) for d, b in a.levels().items() if d > 0}
    inv_levels: dict[int, dict[TypeVec, int]] = {0: {TypeVec(): 1}}
    for d in range(1, trunc.max_faces + 1):
        acc: dict[TypeVec, int] = defaultdict(int)
        for i, bucket in a_levels.items():
            if i > d:
                continue
            for m, c in bucket:
                for n, e in inv_levels[d - i].items():
                    acc[m + n] -= c * e
        inv_levels[d] = {m: c for m, c in acc.items() if c}
    return PolySeries(trunc, {m: c for lvl in inv_levels.values() for m, c in lvl.items()})


def divide_by_s1(p: PolySeries) -> PolySeries:
    """Exact quotient ``q`` with ``S1 * q == p``; ``q`` has one face level fewer.

    Each face level is reduced separately, always cancelling the lex-leading
    monomial (t2 heaviest) against the leading term t2 of S1.
    """
    trunc = p.trunc
    if trunc.max_faces < 1:
        raise DomainError("division by S1 needs max_faces >= 1")
    if p.coeff(TypeVec()):
        raise NotDivisible("nonzero constant term")
    gons = range(2, trunc.max_gon + 1)
    quotient: dict[TypeVec, int] = {}
    for d, bucket in sorted(p.levels().items()):
        rem = dict(bucket)
        heap = [(tuple(-x for x in m.lex_key), m) for m in rem]
        heapq.heapify(heap)
        while heap:
            _, lead = heapq.heappop(heap)
            c = rem.pop(lead, 0)
            if not c:
                continue
            if lead[2] == 0:
                raise NotDivisible(f"level {d}: leading monomial {lead} has no t2 factor")
            q = lead.sub_basis(2)
            quotient[q] = c
            for k in gons:
                if k == 2:
                    continue
                mono = q.add_basis(k)
                val = rem.get(mono, 0) - c
                if mono not in rem:
                    heapq.heappush(heap, (tuple(-x for x in mono.lex_key), mono))
                rem[mono] = val
    return PolySeries(trunc.lower(), quotient)


Rule = Mapping[int, tuple[int, tuple[int, ...]]]


def substitute_monomial(p: PolySeries, rule: Rule) -> dict[tuple[int, ...], int]:
    """Replace each ``t_k`` by ``coeff * x^exps`` and collect by exponent tuple.

    ``rule[k] = (coeff, (e1, e2))`` for up to two fresh variables.
    """
    missing = [k for k in range(2, p.trunc.max_gon + 1) if k not in rule]
    if missing:
        raise DomainError(f"substitution rule missing indices {missing}")
    width = len(next(iter(rule.values()))[1])
    out: dict[tuple[int, ...], int] = defaultdict(int)
    for m, c in p.terms.items():
        coeff = c * prod(rule[k][0] ** v for k, v in m)
        if not coeff:
            continue
        exps = tuple(sum(rule[k][1][i] * v for k, v in m) for i in range(width))
        out[exps] += coeff
    return {e: c for e, c in sorted(out.items()) if c}


def layer(p: PolySeries, grade: Callable[[TypeVec], int]) -> dict[int, PolySeries]:
    """Split ``p`` by ``grade(m)``, keeping the t's (e.g. ``lambda m: m.weight`` for vertices)."""
    buckets: dict[int, dict[TypeVec, int]] = defaultdict(dict)
    for m, c in p.terms.items():
        buckets[grade(m)][m] = c
    return {g: PolySeries(p.trunc, b) for g, b in sorted(buckets.items())}
