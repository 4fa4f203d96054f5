"""Sparse type vectors ``[m2, m3, m4, ...]`` counting the faces of a subdigon by shape.

Component ``k`` counts central ``(k+1)``-gons, i.e. triangles live at ``k = 2``.
Trailing (and interior) zeros are not stored, so ``[1,0]`` and ``[1]`` are the
same value.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from functools import cached_property

from .errors import DomainError

__all__ = ["TypeVec", "parse_type", "basis"]


class TypeVec:
    """Immutable sparse natural vector indexed from 2.

    >>> m = TypeVec.parse("1,0,2")
    >>> m.faces, m.edges, m.vertices
    (3, 11, 9)
    >>> str(m)
    '[1,0,2]'
    """

    def __init__(self, entries: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        pairs = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[int, int] = {}
        for k, mult in pairs:
            if k < 2:
                raise DomainError(f"gon index must be >= 2, got {k}")
            if mult < 0:
                raise DomainError(f"negative multiplicity {mult} at index {k}")
            acc[k] = acc.get(k, 0) + mult
        self._items: tuple[tuple[int, int], ...] = tuple(
            sorted((k, v) for k, v in acc.items() if v)
        )

    # construction -----------------------------------------------------------

    @classmethod
    def from_dense(cls, values: Iterable[int]) -> TypeVec:
        """Build from ``[m2, m3, ...]``."""
        return cls((k, v) for k, v in enumerate(values, start=2))

    @classmethod
    def parse(cls, text: str) -> TypeVec:
        """Parse ``"m2,m3,..."``; surrounding brackets and blanks are optional."""
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        body = body.strip()
        if not body:
            return cls()
        try:
            values = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise DomainError(f"not a type vector: {text!r}") from None
        if any(v < 0 for v in values):
            raise DomainError(f"negative multiplicity in {text!r}")
        return cls.from_dense(values)

    @classmethod
    def _trusted(cls, items: tuple[tuple[int, int], ...]) -> TypeVec:
        # items already sorted, keys >= 2, multiplicities > 0
        obj = cls.__new__(cls)
        obj._items = items
        return obj

    @classmethod
    def single(cls, k: int, mult: int = 1) -> TypeVec:
        """``mult`` copies of the basis vector for index ``k``."""
        return cls({k: mult})

    # container protocol -----------------------------------------------------

    def __getitem__(self, k: int) -> int:
        for key, v in self._items:
            if key == k:
                return v
        return 0

    def items(self) -> tuple[tuple[int, int], ...]:
        """Nonzero ``(k, m_k)`` pairs in ascending gon index."""
        return self._items

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __bool__(self) -> bool:
        return bool(self._items)

    def __hash__(self) -> int:
        try:
            return self._hash
        except AttributeError:
            self._hash = hash(self._items)
            return self._hash

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TypeVec):
            return NotImplemented
        return self._items == other._items

    def __lt__(self, other: TypeVec) -> bool:
        return self.order_key < other.order_key

    def __le__(self, other: TypeVec) -> bool:
        return self.order_key <= other.order_key

    def __repr__(self) -> str:
        return f"TypeVec({str(self)})"

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.dense())) + "]"

    # arithmetic -------------------------------------------------------------

    def __add__(self, other: TypeVec) -> TypeVec:
        if not isinstance(other, TypeVec):
            return NotImplemented
        if not other._items:
            return self
        if not self._items:
            return other
        acc = dict(self._items)
        for k, v in other._items:
            acc[k] = acc.get(k, 0) + v
        return TypeVec._trusted(tuple(sorted(acc.items())))

    def __mul__(self, scalar: int) -> TypeVec:
        if scalar < 0:
            raise DomainError("negative scalar")
        return TypeVec((k, v * scalar) for k, v in self._items)

    __rmul__ = __mul__

    def add_basis(self, j: int) -> TypeVec:
        return TypeVec(self._items + ((j, 1),))

    def sub_basis(self, j: int) -> TypeVec:
        """Decrement component ``j``; raises :class:`DomainError` if it is zero."""
        if self[j] == 0:
            raise DomainError(f"component {j} of {self} is zero")
        return TypeVec((k, v - 1 if k == j else v) for k, v in self._items)

    def dominated_by(self, other: TypeVec) -> bool:
        """Componentwise ``self <= other``."""
        return all(other[k] >= v for k, v in self._items)

    # measures ---------------------------------------------------------------

    @cached_property
    def faces(self) -> int:
        return sum(v for _, v in self._items)

    @cached_property
    def edges(self) -> int:
        return 1 + sum(k * v for k, v in self._items)

    @cached_property
    def vertices(self) -> int:
        return 2 + sum((k - 1) * v for k, v in self._items)

    @property
    def weight(self) -> int:
        """``sum (k-1) m_k``, the degree of v under t_k -> v^(k-1) t_k."""
        return self.vertices - 2

    @property
    def distinct_shapes(self) -> int:
        return len(self._items)

    @property
    def max_gon(self) -> int:
        """Largest index with a nonzero component (0 for the empty type)."""
        return self._items[-1][0] if self._items else 0

    def lessers(self) -> list[tuple[int, TypeVec]]:
        """``(j, m - j)`` for each nonzero component ``j``, ascending in ``j``."""
        return [(j, self.sub_basis(j)) for j, _ in self._items]

    def dense(self, length: int | None = None) -> list[int]:
        """Dense ``[m2, m3, ...]``; padded with zeros up to ``length`` entries if given."""
        size = max(self.max_gon - 1, 0)
        if length is not None:
            size = max(size, length)
        out = [0] * size
        for k, v in self._items:
            out[k - 2] = v
        return out

    @cached_property
    def order_key(self) -> tuple[int, tuple[int, ...]]:
        # Within a face level, larger m2 sorts first, then larger m3, ...
        # (the display order 2t2^2 + 5t2t3 + 3t3^2 + ...).
        return (self.faces, tuple(-v for v in self.dense()))

    @cached_property
    def lex_key(self) -> tuple[int, ...]:
        """Dense tuple; its maximum within a face level is the leading term with t2 heaviest."""
        return tuple(self.dense())


def parse_type(text: str) -> TypeVec:
    return TypeVec.parse(text)


def basis(k: int) -> TypeVec:
    return TypeVec.single(k)
