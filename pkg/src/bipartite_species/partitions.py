"""Integer partitions, the z statistic and the Moebius function."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Any iterable of positive integers is accepted and sorted into
    decreasing order, so ``Partition([1, 2, 1]) == (2, 1, 1)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> dict[int, int]:
        """Map each part size ``i`` to its multiplicity ``l_i``."""
        return dict(Counter(self))

    def union(self, other: Iterable[int]) -> "Partition":
        return Partition((*self, *other))

    def scaled(self, m: int) -> "Partition":
        return Partition(p * m for p in self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _generate(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, largest) + 1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partition_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    # lexicographic on the decreasing part lists: (1,1,1) < (2,1) < (3)
    return tuple(sorted(_generate(n, n)))


def partitions_of(n: int) -> list[Partition]:
    """Every partition of ``n`` exactly once, in canonical order.

    Canonical order is lexicographic on the weakly decreasing part lists,
    so ``partitions_of(3)`` is ``[(1, 1, 1), (2, 1), (3,)]``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partition_tuples(n)]


def partition_tuples(n: int) -> tuple[tuple[int, ...], ...]:
    """Plain-tuple variant of :func:`partitions_of` for inner loops."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _partition_tuples(n)


@lru_cache(maxsize=None)
def _z(parts: tuple[int, ...]) -> int:
    result = 1
    for part, mult in Counter(parts).items():
        result *= part**mult * factorial(mult)
    return result


def z_of(partition: Iterable[int]) -> int:
    """Return ``prod_i i**l_i * l_i!`` where ``l_i`` counts parts equal to ``i``.

    ``n!/z_of(lam)`` is the number of permutations of cycle type ``lam``.
    """
    return _z(tuple(sorted(partition, reverse=True)))


def mobius(k: int) -> int:
    """Number-theoretic Moebius function by trial division."""
    if k < 1:
        raise ValueError(f"mobius is defined for k >= 1, got {k}")
    result = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            result = -result
        d += 1
    if k > 1:
        result = -result
    return result
