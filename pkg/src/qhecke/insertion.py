"""Insertion into Young composition tableaux and the RSK analogue built on it."""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from .comb_core import Cell
from .errors import CertificateError, PreconditionError
from .tableaux import Filling, is_young_composition_tableau, rev_map


@dataclass(frozen=True)
class TwoLineArray:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.top) != len(self.bottom):
            raise PreconditionError("two-line array rows must have equal length")

    @classmethod
    def of_word(cls, word: Sequence[int]) -> TwoLineArray:
        return cls(tuple(range(1, len(word) + 1)), tuple(word))

    def is_ordered(self) -> bool:
        pairs = list(zip(self.top, self.bottom))
        return all(p <= q for p, q in zip(pairs, pairs[1:]))


@dataclass(frozen=True)
class InsertionTrace:
    result: Filling
    insertion_sequence: tuple[Cell, ...]
    new_cell: Cell


def _scan_order(rows: list[list[int]]) -> list[Cell]:
    cells = [(i + 1, j + 1) for i, r in enumerate(rows) for j in range(len(r))]
    cells.sort(key=lambda c: (-c[1], -c[0]))
    return cells


def _insert_rows(rows: list[list[int]], k: int) -> tuple[list[Cell], Cell, int | None]:
    """Insert k into ``rows`` in place.

    Returns the modified cells, the new cell, and the index at which a new row
    was created (``None`` when the new cell extends an existing row).
    """
    k0 = k
    touched: list[Cell] = []
    for c, d in _scan_order(rows):
        row = rows[c - 1]
        here = row[d - 1]
        if d == len(row):
            if here <= k0:
                row.append(k0)
                touched.append((c, d + 1))
                return touched, (c, d + 1), None
        elif here <= k0 < row[d]:
            row[d], k0 = k0, row[d]
            touched.append((c, d + 1))
    firsts = [r[0] for r in rows]
    at = bisect_right(firsts, k0)
    rows.insert(at, [k0])
    new = (at + 1, 1)
    touched.append(new)
    return touched, new, at


def insert(t: Filling, k: int, check: bool = True) -> InsertionTrace:
    """Insert the letter k into a Young composition tableau."""
    if check and not is_young_composition_tableau(t):
        raise PreconditionError(f"not a Young composition tableau: {t}")
    rows = [list(r) for r in t.rows]
    touched, new, _ = _insert_rows(rows, k)
    return InsertionTrace(Filling(tuple(tuple(r) for r in rows)), tuple(touched), new)


def build_PQ(w: TwoLineArray) -> tuple[Filling, Filling]:
    if not w.is_ordered():
        raise PreconditionError(f"two-line array is not in lexicographic order: {w}")
    return _build_PQ(w.top, w.bottom)


@lru_cache(maxsize=200_000)
def _build_PQ(top: tuple[int, ...], bottom: tuple[int, ...]) -> tuple[Filling, Filling]:
    p: list[list[int]] = []
    q: list[list[int]] = []
    for i_k, j_k in zip(top, bottom):
        _, (_, c), _ = _insert_rows(p, j_k)
        if c == 1:
            firsts = [r[0] for r in q]
            q.insert(bisect_right(firsts, i_k), [i_k])
            continue
        for r in range(len(q) - 1, -1, -1):
            if len(q[r]) == c - 1:
                q[r].append(i_k)
                break
        else:
            raise CertificateError(f"no row of length {c - 1} in the recording tableau")
    return (
        Filling(tuple(tuple(r) for r in p)),
        Filling(tuple(tuple(r) for r in q)),
    )


def rsk_hat(word: Sequence[int]) -> tuple[Filling, Filling]:
    """(P-hat, Q-hat) of a word, read as the two-line array over 1..n."""
    word = tuple(word)
    return _build_PQ(tuple(range(1, len(word) + 1)), word)


def P_hat(word: Sequence[int]) -> Filling:
    return rsk_hat(word)[0]


def Q_hat(word: Sequence[int]) -> Filling:
    return rsk_hat(word)[1]


def recording_full(word: Sequence[int]) -> Filling:
    """Cell-by-cell recording tableau: the k-th new cell receives k."""
    if len(set(word)) != len(word):
        raise PreconditionError("recording_full needs distinct letters")
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, letter in enumerate(word, 1):
        _, (r, c), new_row = _insert_rows(p, letter)
        if new_row is not None:
            q.insert(new_row, [step])
        else:
            q[r - 1].append(step)
    return Filling(tuple(tuple(r) for r in q))


@lru_cache(maxsize=200_000)
def rsk(sigma: tuple[int, ...]) -> tuple[Filling, Filling]:
    """Schensted row insertion; tableaux are returned with rows bottom-up."""
    p: list[list[int]] = []
    q: list[list[int]] = []
    for step, x in enumerate(sigma, 1):
        r = 0
        while True:
            if r == len(p):
                p.append([x])
                q.append([step])
                break
            row = p[r]
            at = bisect_left(row, x)
            if at == len(row):
                row.append(x)
                q[r].append(step)
                break
            row[at], x = x, row[at]
            r += 1
    return (
        Filling(tuple(tuple(r) for r in p)),
        Filling(tuple(tuple(r) for r in q)),
    )


def conj(w: TwoLineArray) -> TwoLineArray:
    rx = rev_map(w.top)
    ry = rev_map(w.bottom)
    return TwoLineArray(
        tuple(rx[x] for x in reversed(w.top)),
        tuple(ry[y] for y in reversed(w.bottom)),
    )


def insert_composition(t: Filling, k: int) -> InsertionTrace:
    """Mirror insertion for composition tableaux (rows weakly decreasing).

    Same scan order as :func:`insert` with every comparison reversed; a new
    one-cell row is placed so the first column strictly decreases upward.
    """
    rows = [list(r) for r in t.rows]
    k0 = k
    touched: list[Cell] = []
    for c, d in _scan_order(rows):
        row = rows[c - 1]
        here = row[d - 1]
        if d == len(row):
            if here >= k0:
                row.append(k0)
                touched.append((c, d + 1))
                return InsertionTrace(Filling(tuple(map(tuple, rows))), tuple(touched), (c, d + 1))
        elif here >= k0 > row[d]:
            row[d], k0 = k0, row[d]
            touched.append((c, d + 1))
    negated = [-r[0] for r in rows]
    at = bisect_right(negated, -k0)
    rows.insert(at, [k0])
    touched.append((at + 1, 1))
    return InsertionTrace(Filling(tuple(map(tuple, rows))), tuple(touched), (at + 1, 1))


def mason_FG(w: TwoLineArray) -> tuple[Filling, Filling]:
    """Mason's pair (F, G), obtained from build_PQ through the conjugation identity."""
    p, q = build_PQ(conj(w))
    return _revmap(p), _revmap(q)


def _revmap(t: Filling) -> Filling:
    return t.relabel(rev_map(t.entries()))
