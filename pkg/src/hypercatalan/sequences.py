"""Geode slices and one- and two-variable projections of S and G, with b-file/JSON output."""

from __future__ import annotations

import json
from enum import Enum

from .closedform import geode_bitri_closed, geode_consecutive_closed
from .errors import DomainError
from .geode import build_g
from .recurrence import GeodeRecurrence, two_shape_alternating_sum
from .series import PolySeries, Truncation, build_s, substitute_monomial
from .typevec import TypeVec

__all__ = [
    "KNOWN_SLICES",
    "SliceTemplate",
    "geode_slice",
    "Family",
    "projected_sequence",
    "cayley_rows",
    "closed_form_geode",
    "to_bfile",
    "to_json",
]

KNOWN_SLICES = ("n,1", "1,n", "n,2", "1,0,n", "0,1,n", "n,0,1", "0,0,1,n")


class SliceTemplate:
    """A type-vector template with exactly one free entry ``n``, e.g. ``"1,0,n"``."""

    def __init__(self, text: str):
        body = text.strip().strip("[]")
        tokens = [tok.strip() for tok in body.split(",")]
        free = [i for i, tok in enumerate(tokens) if tok == "n"]
        if len(free) != 1:
            raise DomainError(f"template {text!r} needs exactly one free index 'n'")
        try:
            self.fixed = [0 if tok == "n" else int(tok) for tok in tokens]
        except ValueError:
            raise DomainError(f"bad template {text!r}") from None
        if any(v < 0 for v in self.fixed):
            raise DomainError(f"negative entry in {text!r}")
        self.text = ",".join(tokens)
        self.free_index = free[0] + 2

    def at(self, n: int) -> TypeVec:
        return TypeVec.from_dense(self.fixed) + TypeVec.single(self.free_index, n)

    @property
    def max_gon(self) -> int:
        return len(self.fixed) + 1

    def __str__(self) -> str:
        return f"G[{self.text}]"


def geode_slice(
    pattern: str | SliceTemplate,
    count: int,
    start: int = 0,
    via: str = "division",
    g: PolySeries | None = None,
) -> list[int]:
    """``G`` at ``pattern`` with ``n = start, ..., start + count - 1``."""
    tpl = pattern if isinstance(pattern, SliceTemplate) else SliceTemplate(pattern)
    types = [tpl.at(n) for n in range(start, start + count)]
    if via == "division":
        if g is None:
            top = max((m.faces for m in types), default=0)
            g = build_g(Truncation(top + 1, max(tpl.max_gon, 2)))
        short = [m for m in types if not g.trunc.contains(m)]
        if short:
            raise DomainError(f"truncation {g.trunc} too small for {short[0]}")
        return [g.coeff(m) for m in types]
    if via == "recurrence":
        session = GeodeRecurrence()
        return [session.value(m) for m in types]
    if via == "closed":
        return [closed_form_geode(m) for m in types]
    raise DomainError(f"unknown route {via!r}")


def closed_form_geode(m: TypeVec) -> int:
    """Geode value from a closed form or alternating sum; only for at most two shapes."""
    items = m.items()
    if not items:
        return 1
    if len(items) == 1:
        (k, v), = items
        return geode_consecutive_closed(k, v, 0)
    if len(items) == 2:
        (j, a), (k, b) = items
        if k == j + 1:
            return geode_bitri_closed(a, b) if j == 2 else geode_consecutive_closed(j, a, b)
        return two_shape_alternating_sum(j, k, a, b)
    raise DomainError(f"no closed form for {len(items)} distinct shapes ({m})")


class Family(str, Enum):
    LITTLE_SCHROEDER = "little-schroeder"
    RIORDAN = "riordan"
    CAYLEY = "cayley"


def _series(target: str, faces: int, gons: int) -> PolySeries:
    if target == "S":
        return build_s(Truncation(faces, gons))
    if target == "G":
        return build_g(Truncation(faces + 1, gons))
    raise DomainError(f"target must be S or G, got {target!r}")


def projected_sequence(family: Family | str, target: str = "G", count: int = 8) -> list[int] | list[list[int]]:
    """Coefficients of a projection.

    * little-schroeder: ``t_k -> v^(k-1)``, coefficients of ``v^0 .. v^(count-1)``
    * riordan: ``t_k -> e^k``, coefficients of ``e^0 .. e^(count-1)``
    * cayley: ``t_k -> v^(k-1) f``, rows ``v^0 .. v^(count-1)``, see :func:`cayley_rows`
    """
    family = Family(family)
    if count < 1:
        raise DomainError("count must be >= 1")
    top = count - 1
    if family is Family.RIORDAN:
        p = _series(target, top // 2, max(top, 2))
        coeffs = substitute_monomial(p, {k: (1, (k,)) for k in range(2, p.trunc.max_gon + 1)})
        return [coeffs.get((d,), 0) for d in range(count)]
    p = _series(target, top, max(top + 1, 2))
    if family is Family.LITTLE_SCHROEDER:
        coeffs = substitute_monomial(p, {k: (1, (k - 1,)) for k in range(2, p.trunc.max_gon + 1)})
        return [coeffs.get((d,), 0) for d in range(count)]
    return cayley_rows(p, count)


def cayley_rows(p: PolySeries, rows: int) -> list[list[int]]:
    """Row ``v`` lists the coefficients of ``f^1 .. f^v`` (row 0 is the constant)."""
    coeffs = substitute_monomial(p, {k: (1, (k - 1, 1)) for k in range(2, p.trunc.max_gon + 1)})
    out = [[coeffs.get((0, 0), 0)]]
    for v in range(1, rows):
        out.append([coeffs.get((v, f), 0) for f in range(1, v + 1)])
    return out


def to_bfile(values: list[int] | list[list[int]], offset: int = 0) -> str:
    """``index value`` per line; tables are flattened row by row."""
    flat = [x for row in values for x in row] if values and isinstance(values[0], list) else values
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(flat))


def to_json(values: list[int] | list[list[int]]) -> str:
    if values and isinstance(values[0], list):
        return json.dumps([[str(x) for x in row] for row in values])
    return json.dumps([str(v) for v in values])
