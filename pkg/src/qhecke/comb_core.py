"""Compositions, partitions, diagrams and the orders used on them.

Compositions are plain tuples of positive integers. Cells are ``(row, col)``
pairs, both 1-based, with rows counted from the bottom.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import accumulate

from .errors import DomainError

Composition = tuple[int, ...]
Cell = tuple[int, int]


def as_composition(parts: Iterable[int]) -> Composition:
    alpha = tuple(int(p) for p in parts)
    if any(p < 1 for p in alpha):
        raise DomainError(f"composition parts must be positive: {alpha}")
    return alpha


def size(alpha: Composition) -> int:
    return sum(alpha)


def set_of(alpha: Composition) -> frozenset[int]:
    """Partial sums of all parts but the last."""
    return frozenset(accumulate(alpha[:-1]))


def comp_of(descents: Iterable[int], n: int) -> Composition:
    points = sorted(set(descents))
    if any(d < 1 or d > n - 1 for d in points):
        raise DomainError(f"set {points} is not contained in [1, {n - 1}]")
    if n == 0:
        return ()
    cuts = [0, *points, n]
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def reverse(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    n = sum(alpha)
    if n == 0:
        return ()
    return comp_of(set(range(1, n)) - set_of(alpha), n)


def lambda_sort(alpha: Composition) -> Composition:
    return tuple(sorted(alpha, reverse=True))


def is_partition(alpha: Composition) -> bool:
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def is_shuffle_of_partition_and_ones(alpha: Composition) -> bool:
    big = [p for p in alpha if p >= 2]
    return is_partition(tuple(big))


def compositions(n: int) -> Iterator[Composition]:
    """All compositions of n in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first, *rest)


def partitions(n: int, largest: int | None = None) -> Iterator[Composition]:
    """Partitions of n in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first, *rest)


def rearrangements(lam: Composition) -> list[Composition]:
    """Distinct compositions whose sorted parts equal ``lam``."""
    out: set[Composition] = set()

    def rec(prefix: tuple[int, ...], pool: list[int]) -> None:
        if not pool:
            out.add(prefix)
            return
        for p in sorted(set(pool)):
            rest = list(pool)
            rest.remove(p)
            rec((*prefix, p), rest)

    rec((), list(lam))
    return sorted(out)


def diagram(alpha: Composition) -> frozenset[Cell]:
    return frozenset((i, j) for i, a in enumerate(alpha, 1) for j in range(1, a + 1))


def cmp_lex(alpha: Iterable[int], beta: Iterable[int]) -> int:
    a, b = tuple(alpha), tuple(beta)
    return (a > b) - (a < b)


def dominance_leq(lam: Composition, mu: Composition) -> bool:
    if sum(lam) != sum(mu):
        raise DomainError(f"dominance needs equal sizes: {lam} vs {mu}")
    length = max(len(lam), len(mu))
    pl = list(accumulate(lam + (0,) * (length - len(lam))))
    pm = list(accumulate(mu + (0,) * (length - len(mu))))
    return all(x <= y for x, y in zip(pl, pm))


def dominance_lt(lam: Composition, mu: Composition) -> bool:
    """Strict dominance: ``lam`` is below ``mu``."""
    return lam != mu and dominance_leq(lam, mu)


def set_key(items: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key realising the size-first, then lexicographic order on finite sets."""
    s = sorted(items)
    return (len(s), tuple(s))


def cmp_set(a: Iterable[int], b: Iterable[int]) -> int:
    ka, kb = set_key(a), set_key(b)
    return (ka > kb) - (ka < kb)


def is_simple(alpha: Composition) -> bool:
    for j in range(len(alpha)):
        if alpha[j] < 2:
            continue
        for i in range(j):
            if alpha[i] >= alpha[j] and not any(
                alpha[k] == alpha[j] - 1 for k in range(i + 1, j)
            ):
                return False
    return True
