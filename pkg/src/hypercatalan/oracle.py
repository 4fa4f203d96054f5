"""Brute-force subdigon enumeration, an oracle for hyper-Catalan counts.

A subdigon is either the null subdigon (:class:`Leaf`) or a central
``(k+1)``-gon whose ``k`` non-roof sides carry subdigons: ``Node(k, children)``.
The node arity ``k`` is the variable index ``t_k``.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import product

from .errors import DomainError
from .typevec import TypeVec

__all__ = ["Leaf", "Node", "Subdigon", "accounting_type", "iter_subdigons", "enumerate_subdigons"]


@dataclass(frozen=True)
class Leaf:
    def __str__(self) -> str:
        return "|"


@dataclass(frozen=True)
class Node:
    k: int
    children: tuple[Subdigon, ...]

    def __post_init__(self):
        if self.k < 2 or len(self.children) != self.k:
            raise DomainError(f"node of arity {self.k} needs {self.k} children, got {len(self.children)}")

    def __str__(self) -> str:
        return f"N{self.k}(" + ",".join(map(str, self.children)) + ")"


Subdigon = Leaf | Node

LEAF = Leaf()


def accounting_type(s: Subdigon) -> TypeVec:
    """Multiset of node arities as a type vector."""
    counts: Counter[int] = Counter()
    stack = [s]
    while stack:
        node = stack.pop()
        if isinstance(node, Node):
            counts[node.k] += 1
            stack.extend(node.children)
    return TypeVec(counts)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered tuples of ``parts`` naturals summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def iter_subdigons(faces: int, max_gon: int) -> Iterator[Subdigon]:
    """Every subdigon with exactly ``faces`` nodes and arities in ``2..max_gon``."""
    by_size: list[list[Subdigon]] = [[LEAF]]
    for n in range(1, faces + 1):
        by_size.append(list(_grow(n, max_gon, by_size)))
    yield from by_size[faces]


def _grow(n: int, max_gon: int, by_size: list[list[Subdigon]]) -> Iterator[Subdigon]:
    for k in range(2, max_gon + 1):
        for sizes in _compositions(n - 1, k):
            for kids in product(*(by_size[s] for s in sizes)):
                yield Node(k, kids)


def enumerate_subdigons(max_faces: int, max_gon: int, tree_faces: int = 3) -> dict[TypeVec, int]:
    """Count subdigons by type for every face count up to ``max_faces``.

    Trees are materialised up to ``tree_faces`` faces.  Above that only per-type
    counts are kept: a root of arity ``k`` is combined with every ordered
    choice of child face counts and child types, multiplying child counts.
    """
    if max_faces < 0 or max_gon < 2:
        raise DomainError("need max_faces >= 0 and max_gon >= 2")
    tree_faces = min(tree_faces, max_faces)
    by_size: list[list[Subdigon]] = [[LEAF]]
    tables: list[Counter[TypeVec]] = [Counter({TypeVec(): 1})]
    for n in range(1, tree_faces + 1):
        trees = list(_grow(n, max_gon, by_size))
        by_size.append(trees)
        tables.append(Counter(accounting_type(t) for t in trees))
    for n in range(tree_faces + 1, max_faces + 1):
        table: Counter[TypeVec] = Counter()
        for k in range(2, max_gon + 1):
            root = TypeVec.single(k)
            for sizes in _compositions(n - 1, k):
                for picks in product(*(tables[s].items() for s in sizes)):
                    typ = root
                    count = 1
                    for child, c in picks:
                        typ = typ + child
                        count *= c
                    table[typ] += count
        tables.append(table)
    out: dict[TypeVec, int] = {}
    for table in tables:
        out.update(table)
    return dict(sorted(out.items()))
