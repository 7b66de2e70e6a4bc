"""Fillings of composition diagrams and the tableau families built on them.

A :class:`Filling` stores its rows bottom-up; ``T[i, j]`` reads the entry in
row ``i`` (from the bottom) and column ``j`` (from the left), both 1-based.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cache, cached_property

from .comb_core import Cell, Composition, as_composition, is_partition
from .errors import DomainError, MalformedFillingError, guard

FAMILIES = ("SYT", "SCT", "SYCT", "SIT", "SET", "SYCT_C", "nSYCT")


@dataclass(frozen=True)
class Filling:
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> Filling:
        rs = tuple(tuple(int(x) for x in r) for r in rows)
        if any(len(r) == 0 for r in rs):
            raise DomainError("a filling cannot contain an empty row")
        return cls(rs)

    @cached_property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        return self.rows[i - 1][j - 1]

    def __contains__(self, cell: object) -> bool:
        i, j = cell  # type: ignore[misc]
        return 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1])

    def cells(self) -> Iterator[Cell]:
        for i, r in enumerate(self.rows, 1):
            for j in range(1, len(r) + 1):
                yield (i, j)

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    @cached_property
    def positions(self) -> dict[int, Cell]:
        """Cell of each entry; meaningful for fillings without repeats."""
        return {self[c]: c for c in self.cells()}

    def is_standard(self) -> bool:
        return sorted(self.entries()) == list(range(1, self.n + 1))

    def column(self, j: int) -> list[int]:
        """Entries of column j, bottom to top, skipping rows that are too short."""
        return [r[j - 1] for r in self.rows if len(r) >= j]

    def relabel(self, mapping: dict[int, int]) -> Filling:
        return Filling(tuple(tuple(mapping[x] for x in r) for r in self.rows))

    def swap_values(self, a: int, b: int) -> Filling:
        return self.relabel({x: b if x == a else a if x == b else x for x in self.entries()})

    def to_json(self) -> dict:
        return {"shape": list(self.shape), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> Filling:
        t = cls.from_rows(data.get("rows", []))
        if "shape" in data and tuple(data["shape"]) != t.shape:
            raise DomainError(f"shape {data['shape']} does not match rows {data['rows']}")
        return t

    def pretty(self) -> str:
        """French notation: the bottom row is printed last."""
        if not self.rows:
            return "(empty)"
        width = max(len(str(x)) for x in self.entries())
        return "\n".join(
            " ".join(str(x).rjust(width) for x in r) for r in reversed(self.rows)
        )

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


EMPTY = Filling(())


def row_word(t: Filling) -> tuple[int, ...]:
    return tuple(x for r in t.rows for x in reversed(r))


def col_word(t: Filling) -> tuple[int, ...]:
    width = max(t.shape, default=0)
    return tuple(x for j in range(width, 0, -1) for x in t.column(j))


# validity predicates ----------------------------------------------------


def _rows_increase(t: Filling, strict: bool = True) -> bool:
    if strict:
        return all(a < b for r in t.rows for a, b in zip(r, r[1:]))
    return all(a <= b for r in t.rows for a, b in zip(r, r[1:]))


def _rows_decrease(t: Filling) -> bool:
    return all(a >= b for r in t.rows for a, b in zip(r, r[1:]))


def _first_column_up(t: Filling) -> bool:
    col = t.column(1)
    return all(a < b for a, b in zip(col, col[1:]))


def _columns_up(t: Filling) -> bool:
    width = max(t.shape, default=0)
    for j in range(1, width + 1):
        col = t.column(j)
        if any(a >= b for a, b in zip(col, col[1:])):
            return False
    return True


def _triple_rule(t: Filling) -> bool:
    rows = t.rows
    for i in range(len(rows)):
        for k in range(1, len(rows[i])):
            top = rows[i][k]
            for j in range(i + 1, len(rows)):
                if len(rows[j]) < k:
                    continue
                if top <= rows[j][k - 1]:
                    if len(rows[j]) <= k or not top < rows[j][k]:
                        return False
    return True


def _young_triple_rule(t: Filling) -> bool:
    rows = t.rows
    for i in range(len(rows)):
        for k in range(1, len(rows[i])):
            top = rows[i][k]
            for j in range(i + 1, len(rows)):
                if len(rows[j]) < k:
                    continue
                if top >= rows[j][k - 1]:
                    if len(rows[j]) <= k or not top > rows[j][k]:
                        return False
    return True


def is_young_composition_tableau(t: Filling) -> bool:
    """Young composition tableau, repeated entries allowed."""
    return _rows_increase(t, strict=False) and _first_column_up(t) and _young_triple_rule(t)


def is_SE_decreasing(t: Filling) -> bool:
    rows = t.rows
    for i in range(len(rows)):
        for j in range(i + 1, len(rows)):
            if len(rows[i]) <= len(rows[j]):
                continue
            for k in range(1, len(rows[j]) + 1):
                if not rows[i][k] < rows[j][k - 1]:
                    return False
    return True


def _check(tag: str, t: Filling) -> bool:
    if tag == "SYT":
        return is_partition(t.shape) and _rows_increase(t) and _columns_up(t)
    if tag == "SCT":
        col = t.column(1)
        return (
            _rows_decrease(t)
            and all(a > b for a, b in zip(col, col[1:]))
            and _triple_rule(t)
        )
    if tag == "SYCT":
        return is_young_composition_tableau(t)
    if tag == "SIT":
        return _rows_increase(t) and _first_column_up(t)
    if tag == "SET":
        return _rows_increase(t) and _columns_up(t)
    if tag == "SYCT_C":
        return is_young_composition_tableau(t) and _columns_up(t)
    if tag == "nSYCT":
        return _rows_increase(t) and _columns_up(t) and is_SE_decreasing(t)
    raise DomainError(f"unknown tableau family {tag!r}")


def validate(tag: str, t: Filling) -> bool:
    if tag not in FAMILIES:
        raise DomainError(f"unknown tableau family {tag!r}")
    if not t.is_standard():
        raise MalformedFillingError(f"{tag} needs entries 1..{t.n} each once, got {t}")
    return _check(tag, t)


# enumeration -------------------------------------------------------------


def _grow(alpha: Composition, descending: bool) -> Iterator[Filling]:
    """Fillings whose rows are monotone and whose first column is monotone.

    Values are placed one at a time (1..n, or n..1 when ``descending``) in a
    cell whose left neighbour is filled; a first-column cell additionally needs
    the first-column cell below it filled. Every family is a subset of this
    candidate set for the matching direction.
    """
    n = sum(alpha)
    rows = [[0] * a for a in alpha]
    filled = [0] * len(alpha)
    order = range(n, 0, -1) if descending else range(1, n + 1)
    values = list(order)

    def rec(step: int) -> Iterator[Filling]:
        if step == n:
            yield Filling(tuple(tuple(r) for r in rows))
            return
        v = values[step]
        for i, a in enumerate(alpha):
            f = filled[i]
            if f == a:
                continue
            if f == 0 and i > 0 and filled[i - 1] == 0:
                continue
            rows[i][f] = v
            filled[i] += 1
            yield from rec(step + 1)
            filled[i] -= 1
            rows[i][f] = 0

    yield from rec(0)


@cache
def enumerate_family(tag: str, alpha: Composition) -> tuple[Filling, ...]:
    """All standard fillings of shape alpha in ``tag``, sorted by row word."""
    alpha = as_composition(alpha)
    if tag not in FAMILIES:
        raise DomainError(f"unknown tableau family {tag!r}")
    guard(sum(alpha), 12, "enumerate")
    if tag == "SYT" and not is_partition(alpha):
        return ()
    # composition tableaux have decreasing rows and a first column decreasing
    # upward, so they grow from the largest value
    cands = _grow(alpha, descending=(tag == "SCT"))
    found = [t for t in cands if _check(tag, t)]
    return tuple(sorted(found, key=row_word))


def enumerate_tableaux(tag: str, alpha: Sequence[int]) -> tuple[Filling, ...]:
    return enumerate_family(tag, tuple(alpha))


# statistics and maps ----------------------------------------------------


def des_S(t: Filling) -> frozenset[int]:
    """i such that i+1 lies weakly right of i (composition tableaux)."""
    pos = t.positions
    return frozenset(i for i in range(1, t.n) if pos[i + 1][1] >= pos[i][1])


def des_hatS(t: Filling) -> frozenset[int]:
    """i such that i lies weakly right of i+1 (Young composition tableaux)."""
    pos = t.positions
    return frozenset(i for i in range(1, t.n) if pos[i][1] >= pos[i + 1][1])


def des_SYT(t: Filling) -> frozenset[int]:
    """i such that i+1 lies strictly above i."""
    pos = t.positions
    return frozenset(i for i in range(1, t.n) if pos[i + 1][0] > pos[i][0])


def rev_map(values: Iterable[int]) -> dict[int, int]:
    """The order-reversing involution of a finite set of integers."""
    vs = sorted(set(values))
    return dict(zip(vs, reversed(vs)))


def revmap(t: Filling) -> Filling:
    return t.relabel(rev_map(t.entries()))


def canonical(kind: str, alpha: Sequence[int]) -> Filling:
    """Distinguished standard fillings of a composition diagram.

    ``calT`` / ``sfT`` fill row by row from the bottom, left to right;
    ``calT_prime`` fills the first column bottom-up and then the remaining
    cells left to right from the top row down; ``sfT_prime`` fills column by
    column from the left, each bottom-up; ``tau_prime`` is the maximal row
    reading filling of the K-set construction.
    """
    alpha = as_composition(alpha)
    rows = [[0] * a for a in alpha]
    if kind in ("calT", "sfT"):
        v = 1
        for i, a in enumerate(alpha):
            for j in range(a):
                rows[i][j] = v
                v += 1
    elif kind == "calT_prime":
        for i in range(len(alpha)):
            rows[i][0] = i + 1
        v = len(alpha) + 1
        for i in range(len(alpha) - 1, -1, -1):
            for j in range(1, alpha[i]):
                rows[i][j] = v
                v += 1
    elif kind == "sfT_prime":
        v = 1
        for j in range(max(alpha, default=0)):
            for i, a in enumerate(alpha):
                if a > j:
                    rows[i][j] = v
                    v += 1
    elif kind in ("tau_prime", "tau_prime_shape_recording"):
        from .filtration import tau_prime

        return tau_prime(alpha)
    else:
        raise DomainError(f"unknown canonical tableau {kind!r}")
    return Filling(tuple(tuple(r) for r in rows))


def super_standard(alpha: Sequence[int]) -> Filling:
    return canonical("calT", alpha)
