"""Hyper-Catalan recurrence over vector partitions, and the Geode recurrence.

Vector partitions here allow the empty type ``[]`` as a part: it carries the
factor ``C[] = 1`` and is what lets a partition of ``m - j`` have exactly ``j``
parts.  Dropping it silently breaks the recurrence.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Callable
from dataclasses import dataclass, field
from itertools import product
from math import comb, prod

from .closedform import catalan, hyper_catalan
from .errors import DomainError, NonTermination
from .typevec import TypeVec

__all__ = [
    "VectorPartition",
    "vector_partitions",
    "multinomial",
    "hyper_catalan_recurrence",
    "fuss_power_by_partitions",
    "catalan_convolution_check",
    "ConstantIndex",
    "LargestComponent",
    "RootIndex",
    "XStrategy",
    "GeodeRecurrence",
    "geode_recurrence_value",
    "geode_expand",
    "evaluate_combination",
    "format_combination",
    "lesser_sum_check",
    "two_shape_alternating_sum",
]

VectorPartition = tuple[tuple[TypeVec, int], ...]
"""``((n, k_n), ...)`` with distinct parts ``n``; ``sum k_n = j``, ``sum k_n n = m``."""


def _subvectors(m: TypeVec) -> list[TypeVec]:
    keys = [k for k, _ in m]
    ranges = [range(v + 1) for _, v in m]
    return sorted(TypeVec(zip(keys, vals)) for vals in product(*ranges))


def vector_partitions(m: TypeVec, j: int) -> list[VectorPartition]:
    """All multisets of ``j`` natural vectors (``[]`` allowed) summing to ``m``.

    Parts are chosen in non-increasing position of the sorted candidate list,
    which makes the output exhaustive and duplicate-free.
    """
    if j < 1:
        raise DomainError(f"number of parts must be >= 1, got {j}")
    cands = _subvectors(m)
    index = {n: i for i, n in enumerate(cands)}
    out: list[VectorPartition] = []

    def rec(rest: TypeVec, parts_left: int, start: int, chosen: list[TypeVec]) -> None:
        if parts_left == 0:
            if not rest:
                out.append(tuple(sorted(Counter(chosen).items())))
            return
        if parts_left == 1:
            i = index.get(rest)
            if i is not None and i >= start:
                rec(TypeVec(), 0, i, chosen + [rest])
            return
        for i in range(start, len(cands)):
            n = cands[i]
            if n.dominated_by(rest):
                rec(_minus(rest, n), parts_left - 1, i, chosen + [n])

    rec(m, j, 0, [])
    return out


def _minus(a: TypeVec, b: TypeVec) -> TypeVec:
    return TypeVec((k, v - b[k]) for k, v in a)


def multinomial(counts: list[int] | tuple[int, ...]) -> int:
    """``(sum counts)! / prod(counts!)`` as a product of binomials."""
    total, result = 0, 1
    for c in counts:
        total += c
        result *= comb(total, c)
    return result


def _partition_sum(partitions: list[VectorPartition], value: Callable[[TypeVec], int]) -> int:
    return sum(
        multinomial([k for _, k in part]) * prod(value(n) ** k for n, k in part)
        for part in partitions
    )


def hyper_catalan_recurrence(m: TypeVec, memo: dict[TypeVec, int] | None = None) -> int:
    """``C_m`` from smaller hyper-Catalans only; never touches the closed form."""
    memo = {} if memo is None else memo

    def c(n: TypeVec) -> int:
        if n in memo:
            return memo[n]
        if not n:
            val = 1
        else:
            val = sum(
                _partition_sum(vector_partitions(n.sub_basis(j), j), c) for j, _ in n
            )
        memo[n] = val
        return val

    return c(m)


def fuss_power_by_partitions(m: TypeVec, r: int, hc: Callable[[TypeVec], int] = hyper_catalan) -> int:
    """``[t^m] S^r`` as a sum over vector partitions of ``m`` into ``r`` parts."""
    return _partition_sum(vector_partitions(m, r), hc)


def catalan_convolution_check(M: int) -> bool:
    return all(
        catalan(m + 1) == sum(catalan(n) * catalan(m - n) for n in range(m + 1))
        for m in range(M + 1)
    )


# -- Geode recurrence ---------------------------------------------------------


@dataclass(frozen=True)
class ConstantIndex:
    """Always raise component ``k``."""

    k: int

    def __post_init__(self):
        if self.k < 2:
            raise DomainError(f"index must be >= 2, got {self.k}")

    def __call__(self, m: TypeVec) -> int:
        return self.k

    def __str__(self) -> str:
        return str(self.k)


@dataclass(frozen=True)
class LargestComponent:
    """Index of the largest component, smallest index on ties (2 for the empty type)."""

    def __call__(self, m: TypeVec) -> int:
        if not m:
            return 2
        best = max(v for _, v in m)
        return min(k for k, v in m if v == best)

    def __str__(self) -> str:
        return "max"


@dataclass(frozen=True)
class RootIndex:
    """Index ``k`` for ``root`` only; below it, :class:`LargestComponent`."""

    k: int
    root: TypeVec

    def __call__(self, m: TypeVec) -> int:
        return self.k if m == self.root else LargestComponent()(m)

    def __str__(self) -> str:
        return f"{self.k}@root"


XStrategy = ConstantIndex | LargestComponent | RootIndex

DEFAULT_BUDGET = 10**6


@dataclass
class GeodeRecurrence:
    """Single-owner session: memo tables and an expansion budget.

    ``G[] = 1``; otherwise with ``j = x(m)`` and ``M = m + j``::

        G_m = C_M - sum(G_k for k in lessers(M) if k != m)
    """

    x: XStrategy = field(default_factory=LargestComponent)
    budget: int = DEFAULT_BUDGET
    max_gon: int | None = None
    expansions: int = 0
    _values: dict[TypeVec, int] = field(default_factory=dict, repr=False)
    _combos: dict[TypeVec, dict[TypeVec, int]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if isinstance(self.x, ConstantIndex) and self.max_gon is not None and self.x.k > self.max_gon:
            raise DomainError(f"constant index {self.x.k} exceeds max gon {self.max_gon}")

    def _step(self, m: TypeVec) -> tuple[TypeVec, list[TypeVec]]:
        self.expansions += 1
        if self.expansions > self.budget:
            raise NonTermination(f"expansion budget {self.budget} exhausted at {m}")
        big = m.add_basis(self.x(m))
        return big, [k for _, k in big.lessers() if k != m]

    def value(self, m: TypeVec) -> int:
        return self._walk(m, self._values, leaf=hyper_catalan, base=1, combine=_int_combine)

    def expand(self, m: TypeVec) -> dict[TypeVec, int]:
        """Signed hyper-Catalan combination equal to ``G_m``."""
        combo = self._walk(
            m, self._combos, leaf=lambda t: {t: 1}, base={TypeVec(): 1}, combine=_combo_combine
        )
        return {t: c for t, c in sorted(combo.items()) if c}

    def _walk(self, root, memo, leaf, base, combine):
        # Iterative post-order walk; recursion depth would grow with the weight of m.
        open_nodes: set[TypeVec] = set()
        stack: list[tuple[TypeVec, TypeVec | None, list[TypeVec] | None]] = [(root, None, None)]
        while stack:
            m, big, rest = stack.pop()
            if m in memo:
                continue
            if not m:
                memo[m] = base
                continue
            if big is None:
                if m in open_nodes:
                    raise NonTermination(f"strategy {self.x} revisits {m}")
                open_nodes.add(m)
                big, rest = self._step(m)
                stack.append((m, big, rest))
                stack.extend((k, None, None) for k in rest if k not in memo)
                continue
            memo[m] = combine(leaf(big), [memo[k] for k in rest])
            open_nodes.discard(m)
        return memo[root]


def _int_combine(head: int, subs: list[int]) -> int:
    return head - sum(subs)


def _combo_combine(head: dict[TypeVec, int], subs: list[dict[TypeVec, int]]) -> dict[TypeVec, int]:
    out = Counter(head)
    for sub in subs:
        out.subtract(sub)
    return {t: c for t, c in out.items() if c}


def geode_recurrence_value(m: TypeVec, x: XStrategy | None = None, budget: int = DEFAULT_BUDGET) -> int:
    return GeodeRecurrence(x or LargestComponent(), budget).value(m)


def geode_expand(m: TypeVec, x: XStrategy | None = None, budget: int = DEFAULT_BUDGET) -> dict[TypeVec, int]:
    return GeodeRecurrence(x or LargestComponent(), budget).expand(m)


def evaluate_combination(combo: dict[TypeVec, int]) -> int:
    return sum(c * hyper_catalan(t) for t, c in combo.items())


def format_combination(combo: dict[TypeVec, int]) -> str:
    """``+[2,1,1] -[3,0,1] -[3,1] +2[4]``; terms by face count, then ascending dense vector."""
    terms = sorted(combo.items(), key=lambda tc: (tc[0].faces, tc[0].lex_key))
    parts = []
    for t, c in terms:
        sign = "+" if c > 0 else "-"
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{t}")
    return " ".join(parts)


def lesser_sum_check(m: TypeVec, geode: Callable[[TypeVec], int]) -> bool:
    """``C_m == sum of G over the lessers of m`` for a nonempty type."""
    if not m:
        raise DomainError("lesser sum needs a nonempty type")
    return hyper_catalan(m) == sum(geode(k) for _, k in m.lessers())


def two_shape_alternating_sum(j: int, k: int, m: int, n: int) -> int:
    """``sum_i (-1)^i C((m+1+i) j + (n-i) k)``, equal to ``G(m j + n k)``."""
    if j == k:
        raise DomainError("shapes must differ")
    if j < 2 or k < 2 or m < 1 or n < 1:
        raise DomainError(f"bad arguments ({j}, {k}, {m}, {n})")
    return sum(
        (-1) ** i * hyper_catalan(TypeVec({j: m + 1 + i, k: n - i})) for i in range(n + 1)
    )
