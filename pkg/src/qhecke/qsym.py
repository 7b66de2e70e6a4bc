"""Homogeneous quasisymmetric functions in the fundamental basis."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Mapping
from fractions import Fraction
from functools import cache

from .comb_core import (
    Composition,
    as_composition,
    comp_of,
    complement,
    compositions,
    is_partition,
    lambda_sort,
    reverse,
)
from .errors import CertificateError, DomainError, guard
from .permutation import des_L
from .tableaux import des_hatS, des_S, des_SYT, enumerate_family, row_word

log = logging.getLogger(__name__)


class QSym:
    """Integer combination of fundamental quasisymmetric functions of one degree."""

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Composition, int] | None = None):
        self.degree = degree
        clean: dict[Composition, int] = {}
        for alpha, c in (coeffs or {}).items():
            alpha = tuple(alpha)
            if sum(alpha) != degree:
                raise DomainError(f"{alpha} is not a composition of {degree}")
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
        self._coeffs = {a: c for a, c in clean.items() if c}

    @property
    def coeffs(self) -> dict[Composition, int]:
        return dict(self._coeffs)

    def coeff(self, alpha: Iterable[int]) -> int:
        return self._coeffs.get(tuple(alpha), 0)

    def terms(self) -> list[tuple[Composition, int]]:
        return sorted(self._coeffs.items())

    def total(self) -> int:
        return sum(self._coeffs.values())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def _same(self, other: QSym) -> None:
        if self.degree != other.degree:
            raise DomainError(f"degree mismatch: {self.degree} vs {other.degree}")

    def __add__(self, other: QSym) -> QSym:
        self._same(other)
        out = dict(self._coeffs)
        for a, c in other._coeffs.items():
            out[a] = out.get(a, 0) + c
        return QSym(self.degree, out)

    def __neg__(self) -> QSym:
        return QSym(self.degree, {a: -c for a, c in self._coeffs.items()})

    def __sub__(self, other: QSym) -> QSym:
        return self + (-other)

    def __mul__(self, k: int) -> QSym:
        return QSym(self.degree, {a: k * c for a, c in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSym):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        return " + ".join(
            (f"{c}*" if c != 1 else "") + "F" + str(a).replace(" ", "") for a, c in self.terms()
        )

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "coeffs": {".".join(map(str, a)): c for a, c in self.terms()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> QSym:
        coeffs = {
            tuple(int(p) for p in key.split(".")) if key else (): int(c)
            for key, c in data["coeffs"].items()
        }
        return cls(int(data["degree"]), coeffs)


def zero(n: int) -> QSym:
    return QSym(n)


def qsum(n: int, items: Iterable[QSym]) -> QSym:
    out = zero(n)
    for x in items:
        out = out + x
    return out


def f_elem(alpha: Iterable[int]) -> QSym:
    alpha = as_composition(alpha)
    return QSym(sum(alpha), {alpha: 1})


def rho(x: QSym) -> QSym:
    return QSym(x.degree, {reverse(a): c for a, c in x.coeffs.items()})


def coeff(x: QSym, alpha: Iterable[int]) -> int:
    return x.coeff(alpha)


def _tally(n: int, keys: Iterable[Composition]) -> QSym:
    out: dict[Composition, int] = {}
    for a in keys:
        out[a] = out.get(a, 0) + 1
    return QSym(n, out)


@cache
def schur_F(lam: Composition) -> QSym:
    lam = as_composition(lam)
    if not is_partition(lam):
        raise DomainError(f"{lam} is not a partition")
    n = sum(lam)
    return _tally(n, (comp_of(des_SYT(t), n) for t in enumerate_family("SYT", lam)))


@cache
def quasischur_F(alpha: Composition) -> QSym:
    alpha = as_composition(alpha)
    n = sum(alpha)
    return _tally(n, (comp_of(des_S(t), n) for t in enumerate_family("SCT", reverse(alpha))))


@cache
def young_quasischur_F(alpha: Composition) -> QSym:
    alpha = as_composition(alpha)
    n = sum(alpha)
    return _tally(n, (comp_of(des_hatS(t), n) for t in enumerate_family("SYCT", alpha)))


def _row_descent_sum(tag: str, alpha: Composition) -> QSym:
    n = sum(alpha)
    return _tally(
        n,
        (complement(comp_of(des_L(row_word(t)), n)) for t in enumerate_family(tag, alpha)),
    )


@cache
def dual_immaculate_F(alpha: Composition) -> QSym:
    return _row_descent_sum("SIT", as_composition(alpha))


@cache
def extended_schur_F(alpha: Composition) -> QSym:
    return _row_descent_sum("SET", as_composition(alpha))


BASES = {"QS": quasischur_F, "YQS": young_quasischur_F}


def triangular_key(alpha: Composition) -> tuple:
    """Total order: lambda(alpha) descending in lex (refines dominance), then alpha lex."""
    return (tuple(-p for p in lambda_sort(alpha)), alpha)


@cache
def _basis_table(basis: str, n: int) -> tuple[tuple[Composition, ...], dict, bool]:
    fn = BASES[basis]
    comps = tuple(sorted(compositions(n), key=triangular_key))
    rank = {a: i for i, a in enumerate(comps)}
    table = {a: fn(a) for a in comps}
    triangular = all(
        table[a].coeff(a) == 1 and all(rank[b] >= rank[a] for b, _ in table[a].terms())
        for a in comps
    )
    return comps, table, triangular


def expand_in(x: QSym, basis: str) -> dict[Composition, int]:
    """Coefficients c with x = sum_alpha c_alpha B_alpha for B in {QS, YQS}.

    Uses back-substitution when the basis is unitriangular against F in the
    order of :func:`triangular_key` (checked); otherwise falls back to exact
    rational elimination. Raises if x is not an integral combination.
    """
    basis = basis.upper()
    if basis not in BASES:
        raise DomainError(f"unknown basis {basis!r}; expected QS or YQS")
    n = x.degree
    guard(n, 9, "expand_in")
    comps, table, triangular = _basis_table(basis, n)
    if triangular:
        rest = dict(x.coeffs)
        out: dict[Composition, int] = {}
        for a in comps:
            c = rest.get(a, 0)
            if c:
                out[a] = c
                for b, v in table[a].terms():
                    rest[b] = rest.get(b, 0) - c * v
        if any(rest.values()):
            raise CertificateError("element is not in the span of the basis")
        return dict(sorted(out.items()))
    log.warning("%s basis is not unitriangular in degree %d; using exact elimination", basis, n)
    return _solve_exact(x, comps, table)


def _solve_exact(x: QSym, comps, table) -> dict[Composition, int]:
    m = len(comps)
    rows = [[Fraction(table[b].coeff(a)) for b in comps] + [Fraction(x.coeff(a))] for a in comps]
    piv_cols = []
    r = 0
    for col in range(m):
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [vi - f * vr for vi, vr in zip(rows[i], rows[r])]
        piv_cols.append(col)
        r += 1
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in rows):
        raise CertificateError("element is not in the span of the basis")
    out: dict[Composition, int] = {}
    for i, col in enumerate(piv_cols):
        v = rows[i][-1]
        if v.denominator != 1:
            raise CertificateError("expansion has non-integer coefficients")
        if v:
            out[comps[col]] = int(v)
    return dict(sorted(out.items()))


def from_descent_sets(n: int, descent_sets: Iterable[Iterable[int]]) -> QSym:
    """Sum of F_{comp(D)^c} over the given descent sets."""
    return _tally(n, (complement(comp_of(d, n)) for d in descent_sets))
