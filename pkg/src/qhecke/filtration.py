"""Distinguished filtrations, the K-sets with their modules, and finite certificates."""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cache

from .comb_core import (
    Cell,
    Composition,
    as_composition,
    diagram,
    is_partition,
    is_shuffle_of_partition_and_ones,
    lambda_sort,
    rearrangements,
    reverse,
)
from .errors import CertificateError, DomainError, guard
from .hecke import (
    CombModule,
    ModuleMap,
    build_module,
    canonical_quotient,
    characteristic,
    eta_map,
    gamma_map,
    hom_check,
    interval_module,
    irreducible_type,
    is_basis_submodule,
    is_surjective,
    iso_check,
    module_V,
    module_X,
    theta_X,
)
from .insertion import rsk, rsk_hat
from .permutation import (
    Perm,
    all_perms,
    des_L,
    inv_L,
    leq_L,
    parse_perm,
    reduced_word,
    s_left,
    times_w0,
    w0_parabolic,
)
from .qsym import QSym, expand_in, quasischur_F, qsum, schur_F, young_quasischur_F
from .tableaux import Filling, canonical, enumerate_family, row_word


def m_key(sigma: Perm) -> tuple[Composition, Filling]:
    p, q = rsk_hat(sigma)
    return p.shape, q


def m_equiv(sigma: Perm, rho: Perm) -> bool:
    if len(sigma) != len(rho):
        raise DomainError("m_equiv needs permutations of equal size")
    return m_key(sigma) == m_key(rho)


@cache
def _classes(n: int) -> dict[tuple[Composition, Filling], frozenset[Perm]]:
    out: dict[tuple[Composition, Filling], set[Perm]] = {}
    for s in all_perms(n):
        out.setdefault(m_key(s), set()).add(s)
    return {k: frozenset(v) for k, v in out.items()}


def closure_check(subset: Iterable[Perm], exhaustive: bool = False) -> bool:
    """Whether the subset is a union of classes of the P-hat-shape/Q-hat relation.

    By default each class is sized through the bijection with SYCT(shape);
    ``exhaustive`` instead enumerates the classes of the whole group.
    """
    s = set(subset)
    if not s:
        return True
    n = len(next(iter(s)))
    guard(n, 8, "closure_check")
    keys = Counter(m_key(x) for x in s)
    if exhaustive:
        classes = _classes(n)
        return all(classes[k] <= s for k in keys)
    return all(c == len(enumerate_family("SYCT", k[0])) for k, c in keys.items())


# filtrations --------------------------------------------------------------


@dataclass(frozen=True)
class Stratum:
    recording: Filling
    gamma: Composition
    members: tuple[Perm, ...]


@dataclass
class FiltrationReport:
    lo: Perm
    hi: Perm
    strata: list[Stratum]
    submodule_chain_ok: bool = False
    quotient_characteristics: list[Composition] = field(default_factory=list)
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def prefixes(self) -> list[frozenset[Perm]]:
        out, acc = [], set()
        for s in self.strata:
            acc |= set(s.members)
            out.append(frozenset(acc))
        return out

    def to_json(self) -> dict:
        return {
            "interval": ["".join(map(str, self.lo)), "".join(map(str, self.hi))],
            "strata": [
                {
                    "gamma": list(s.gamma),
                    "recording": s.recording.to_json(),
                    "members": ["".join(map(str, m)) for m in s.members],
                }
                for s in self.strata
            ],
            "checks": dict(self.checks),
        }

    @classmethod
    def from_json(cls, data: dict) -> FiltrationReport:
        strata = [
            Stratum(
                Filling.from_json(s["recording"]),
                tuple(s["gamma"]),
                tuple(parse_perm(m) for m in s["members"]),
            )
            for s in data["strata"]
        ]
        lo, hi = (parse_perm(x) for x in data["interval"])
        checks = {k: bool(v) for k, v in data.get("checks", {}).items()}
        return cls(
            lo,
            hi,
            strata,
            submodule_chain_ok=checks.get("submodule_chain", False),
            quotient_characteristics=[s.gamma for s in strata],
            checks=checks,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiltrationReport):
            return NotImplemented
        return (self.lo, self.hi, self.strata, self.checks) == (
            other.lo,
            other.hi,
            other.strata,
            other.checks,
        )


TIEBREAKS = ("lex", "revlex")


def _recording_order_key(q: Filling, tiebreak: str):
    dominance = tuple(-p for p in lambda_sort(q.shape))
    if tiebreak == "lex":
        return (dominance, q.shape, row_word(q))
    if tiebreak == "revlex":
        return (dominance, tuple(-p for p in q.shape), tuple(-x for x in row_word(q)))
    raise DomainError(f"unknown tiebreak {tiebreak!r}; expected one of {TIEBREAKS}")


def _verify(report: FiltrationReport, module: CombModule) -> FiltrationReport:
    prefixes = report.prefixes
    chain_ok = all(is_basis_submodule(module, b) for b in prefixes)
    if not chain_ok:
        raise CertificateError("a prefix of the filtration is not a submodule")
    lower: frozenset[Perm] = frozenset()
    for s, upper in zip(report.strata, prefixes):
        if characteristic(module, upper, lower) != young_quasischur_F(s.gamma):
            raise CertificateError(f"stratum {s.gamma} has the wrong characteristic")
        lower = upper
    total = qsum(module.n, (young_quasischur_F(s.gamma) for s in report.strata))
    report.submodule_chain_ok = True
    report.quotient_characteristics = [s.gamma for s in report.strata]
    report.checks.update(
        submodule_chain=True,
        quotient_characteristics=True,
        partition_of_interval=sorted(x for s in report.strata for x in s.members)
        == sorted(module.basis),
        total_characteristic=total == characteristic(module),
    )
    if not all(report.checks.values()):
        raise CertificateError(f"filtration checks failed: {report.checks}")
    return report


def _strata(elems: Iterable[Perm], tiebreak: str) -> list[Stratum]:
    groups: dict[tuple[Filling, Composition], list[Perm]] = {}
    for s in elems:
        p, q = rsk_hat(times_w0(s))
        groups.setdefault((q, p.shape), []).append(s)
    order = sorted(groups, key=lambda k: (_recording_order_key(k[0], tiebreak), k[1]))
    return [Stratum(q, g, tuple(sorted(groups[(q, g)]))) for q, g in order]


def filtration_V(alpha: Sequence[int], tiebreak: str = "lex") -> FiltrationReport:
    alpha = as_composition(alpha)
    guard(sum(alpha), 8, "filtration_V")
    lo = row_word(canonical("calT", alpha))
    hi = row_word(canonical("calT_prime", alpha))
    m = interval_module(lo, hi)
    report = FiltrationReport(lo, hi, _strata(m.basis, tiebreak))
    report.checks["closed_under_m_equiv"] = closure_check(times_w0(s) for s in m.basis)
    return _verify(report, m)


def filtration_X(alpha: Sequence[int]) -> FiltrationReport:
    alpha = as_composition(alpha)
    if not is_shuffle_of_partition_and_ones(alpha):
        raise DomainError(f"{alpha} is not a shuffle of a partition and ones")
    guard(sum(alpha), 8, "filtration_X")
    lo = row_word(canonical("sfT", alpha))
    hi = row_word(canonical("sfT_prime", alpha))
    m = interval_module(lo, hi)
    strata = _strata(m.basis, "lex")
    expected = canonical("sfT", reverse(alpha))
    report = FiltrationReport(lo, hi, strata)
    report.checks["constant_recording"] = all(s.recording == expected for s in strata)
    return _verify(report, m)


# K-sets and the module on them --------------------------------------------


def _k_by_interval(alpha: Composition) -> frozenset[Perm]:
    lo = row_word(canonical("calT", alpha))
    hi = row_word(canonical("calT_prime", alpha))
    target = canonical("calT", reverse(alpha))
    out = set()
    for s in interval_module(lo, hi).basis:
        p, q = rsk_hat(times_w0(s))
        if p.shape == alpha and q == target:
            out.add(s)
    return frozenset(out)


def _k_by_sit(alpha: Composition) -> frozenset[Perm]:
    return frozenset(
        row_word(t)
        for t in enumerate_family("SIT", alpha)
        if rsk_hat(times_w0(row_word(t)))[0].shape == alpha
    )


@cache
def K_alpha(alpha: Sequence[int]) -> frozenset[Perm]:
    alpha = as_composition(alpha)
    guard(sum(alpha), 8, "K_alpha")
    a, b = _k_by_interval(alpha), _k_by_sit(alpha)
    if a != b:
        raise CertificateError(f"the two computations of K for {alpha} disagree")
    return a


def Y_module(alpha: Sequence[int]) -> CombModule:
    alpha = as_composition(alpha)
    k = K_alpha(alpha)

    def rule(i: int, s: Perm) -> Perm | None:
        if i in des_L(s):
            return s
        up = s_left(i, s)
        return up if up in k else None

    m = build_module(sum(alpha), sorted(k), rule, "Y")
    if characteristic(m) != young_quasischur_F(alpha):
        raise CertificateError(f"Y module of {alpha} has the wrong characteristic")
    return m


@dataclass(frozen=True)
class SeqData:
    seq1: tuple[Cell, ...]
    seq2: tuple[Cell, ...]
    D: frozenset[Cell]
    tilde_alpha: Composition


def seq12(alpha: Sequence[int]) -> SeqData:
    """Peel off the cells whose entries are largest in the maximal K-element."""
    alpha = as_composition(alpha)
    if not is_shuffle_of_partition_and_ones(alpha):
        raise DomainError(f"{alpha} is not a shuffle of a partition and ones")
    if not alpha:
        return SeqData((), (), frozenset(), ())
    a = list(alpha)
    i = a.index(max(a))
    c1: list[Cell] = [(i + 1, a[i])]
    c2: list[Cell] = []
    while True:
        if a[i] >= 3:
            nxt = [j for j in range(i + 1, len(a)) if a[j] >= a[i] - 1]
            if not nxt:
                break
            i = nxt[0]
            c1.insert(0, (i + 1, a[i]))
            continue
        j = i
        while j + 1 < len(a) and a[j + 1] == a[i]:
            j += 1
        c1 = [(t + 1, a[t]) for t in range(j, i, -1)] + c1
        beta = a[j + 1 :]
        offset = j + 1
        while beta:
            t = next(t for t in range(len(beta)) if is_partition(tuple(beta[t:])))
            c2.extend((offset + r + 1, beta[r]) for r in range(len(beta) - 1, t - 1, -1))
            beta = beta[:t] + [b - 1 for b in beta[t:]]
            while beta and beta[-1] == 0:
                beta.pop()
        break
    d = diagram(alpha) - set(c1) - set(c2)
    lengths = [sum(1 for (r, _) in d if r == row) for row in range(1, len(alpha) + 1)]
    while lengths and lengths[-1] == 0:
        lengths.pop()
    if 0 in lengths or d != diagram(tuple(lengths)):
        raise CertificateError(f"the remaining cells for {alpha} do not form a composition diagram")
    return SeqData(tuple(c1), tuple(c2), frozenset(d), tuple(lengths))


@cache
def tau_prime(alpha: Sequence[int]) -> Filling:
    alpha = as_composition(alpha)
    data = seq12(alpha)
    n = sum(alpha)
    rows = [[0] * a for a in alpha]
    if data.tilde_alpha:
        inner = tau_prime(data.tilde_alpha)
        for r, j in inner.cells():
            rows[r - 1][j - 1] = inner[r, j]
    for k, (r, j) in enumerate(data.seq2 + data.seq1, 1):
        rows[r - 1][j - 1] = n + 1 - k
    return Filling(tuple(tuple(r) for r in rows))


def K_characterizations(alpha: Sequence[int]) -> bool:
    alpha = as_composition(alpha)
    if not is_shuffle_of_partition_and_ones(alpha):
        raise DomainError(f"{alpha} is not a shuffle of a partition and ones")
    guard(sum(alpha), 8, "K_characterizations")
    k = K_alpha(alpha)
    by_fillings = frozenset(row_word(t) for t in enumerate_family("nSYCT", alpha))
    lo = row_word(canonical("sfT", alpha))
    hi = row_word(tau_prime(alpha))
    if not leq_L(lo, hi):
        raise CertificateError(f"row word of tau' is not above the bottom for {alpha}")
    by_interval = frozenset(interval_module(lo, hi).basis)
    if not (k == by_fillings == by_interval):
        raise CertificateError(f"K characterizations disagree for {alpha}")
    return True


# the surjection chain -----------------------------------------------------


@dataclass
class SurjectionChain:
    gamma: ModuleMap
    eta: ModuleMap
    delta: ModuleMap
    upsilon: ModuleMap
    delta_tilde: ModuleMap | None
    checks: dict[str, bool]


def surjection_chain(alpha: Sequence[int]) -> SurjectionChain:
    alpha = as_composition(alpha)
    guard(sum(alpha), 7, "surjection_chain")
    v, x, y = module_V(alpha), module_X(alpha), Y_module(alpha)
    q = canonical_quotient(alpha)
    k = set(y.basis)
    by_word = {row_word(t): t for t in v.basis}
    keep_q = set(q.basis)
    gamma, eta = gamma_map(alpha), eta_map(alpha)
    delta = ModuleMap(
        v, y, {t: (row_word(t) if row_word(t) in k else None) for t in v.basis}, "delta"
    )
    upsilon = ModuleMap(
        y, q, {s: (by_word[s] if by_word[s] in keep_q else None) for s in y.basis}, "Upsilon"
    )
    checks = {
        "delta_hom": hom_check(delta) and is_surjective(delta),
        "upsilon_hom": hom_check(upsilon) and is_surjective(upsilon),
        "gamma_hom": hom_check(gamma),
        "eta_hom": hom_check(eta) and is_surjective(eta),
        "square_commutes": all(upsilon(delta(t)) == eta(gamma(t)) for t in v.basis),
    }
    delta_tilde = None
    if is_shuffle_of_partition_and_ones(alpha):
        delta_tilde = ModuleMap(
            x, y, {t: (row_word(t) if row_word(t) in k else None) for t in x.basis}, "delta~"
        )
        checks["delta_tilde_hom"] = hom_check(delta_tilde) and is_surjective(delta_tilde)
        checks["triangle_commutes"] = all(delta(t) == delta_tilde(gamma(t)) for t in v.basis)
    if not all(checks.values()):
        raise CertificateError(f"surjection chain checks failed for {alpha}: {checks}")
    return SurjectionChain(gamma, eta, delta, upsilon, delta_tilde, checks)


def upsilon_is_iso(alpha: Sequence[int]) -> bool:
    return iso_check(surjection_chain(alpha).upsilon)


# set and cell bookkeeping ---------------------------------------------------


def iota(alpha: Composition, cell: Cell) -> int:
    i, j = cell
    return sum(alpha[:i]) - j + 1


def inv_cells(t: Filling) -> frozenset[tuple[Cell, Cell]]:
    """Pairs of cells in different rows, lower row first, with the lower entry larger."""
    out = set()
    cells = list(t.cells())
    for c1 in cells:
        for c2 in cells:
            if c1[0] < c2[0] and t[c1] > t[c2]:
                out.add((c1, c2))
    return frozenset(out)


def row_pairs(alpha: Composition) -> frozenset[tuple[int, int]]:
    return frozenset(
        (iota(alpha, (i, j)), iota(alpha, (i, k)))
        for i, a in enumerate(alpha, 1)
        for k in range(1, a + 1)
        for j in range(k + 1, a + 1)
    )


def inversion_decomposition_holds(t: Filling) -> bool:
    alpha = t.shape
    from_cells = {(iota(alpha, a), iota(alpha, b)) for a, b in inv_cells(t)}
    rows = row_pairs(alpha)
    return not (from_cells & rows) and inv_L(row_word(t)) == from_cells | rows


# the certificate for shape (5,2,1) -------------------------------------------


@dataclass(frozen=True)
class Fact:
    name: str
    ok: bool
    detail: str


APPENDIX_LO = (5, 4, 3, 2, 1, 7, 6, 8)
APPENDIX_HI = (8, 7, 6, 4, 1, 5, 2, 3)


def _pi_via(m: CombModule, word: Sequence[int], b: Perm) -> Perm | None:
    return m.act_word(word, b)


def verify_appendix() -> list[Fact]:
    alpha = (5, 2, 1)
    facts: list[Fact] = []

    theta = theta_X(alpha)
    m = theta.dst
    ok = (
        iso_check(theta)
        and len(m.basis) == 64
        and m.basis == interval_module(APPENDIX_LO, APPENDIX_HI).basis
    )
    facts.append(Fact("interval_iso", ok, f"X_(5,2,1) ~ B(54321768, 87641523), dim {len(m.basis)}"))

    ch = characteristic(m)
    qs = qsum(8, (quasischur_F(a) for a in rearrangements(alpha)))
    exp = expand_in(ch, "QS")
    ok = ch == schur_F(alpha) == qs and exp == {a: 1 for a in rearrangements(alpha)}
    facts.append(Fact("schur_expansion", ok, "ch = s_(5,2,1) = sum of six quasi-Schur functions"))

    sink = irreducible_type(m, APPENDIX_HI)
    facts.append(Fact("sink_type", sink == (1, 1, 2, 4), f"sink spans F_{sink}"))

    s125 = quasischur_F((1, 2, 5))
    want = {(1, 1, 2, 4): 1, (2, 2, 4): 1, (2, 1, 5): 0, (1, 2, 1, 4): 0}
    got = {a: s125.coeff(a) for a in want}
    facts.append(
        Fact(
            "quasischur_coefficients",
            got == want and s125.total() == len(enumerate_family("SCT", alpha)) == 16,
            ", ".join(f"[F{a}]={c}" for a, c in got.items()),
        )
    )

    w = w0_parabolic({1, 3, 5, 6, 7}, 8)
    word1 = reduced_word(w)
    word2 = (1, 3, 7, 6, 5, 7, 6, 7)
    allowed = {None, (8, 7, 4, 2, 1, 6, 3, 5), (8, 7, 6, 2, 1, 4, 3, 5)}
    images = [(_pi_via(m, word1, s), _pi_via(m, word2, s)) for s in m.basis]
    ok = all(a == b and a in allowed for a, b in images)
    c, d = (8, 7, 4, 2, 1, 6, 3, 5), (8, 7, 6, 2, 1, 4, 3, 5)
    ok = ok and m.act(2, c) == (8, 7, 4, 3, 1, 6, 2, 5) and m.act(2, d) == (8, 7, 6, 3, 1, 4, 2, 5)
    ok = ok and m.act_word((3, 2), c) == (8, 7, 4, 3, 1, 6, 2, 5) and m.act_word((3, 2), d) is None
    facts.append(
        Fact("orbit", ok, "pi_w0({1,3,5,6,7}) lands in {0, 87421635, 87621435} on all 64")
    )

    lmod = interval_module((8, 7, 6, 2, 1, 5, 3, 4), APPENDIX_HI)
    lpmod = interval_module((8, 7, 6, 3, 1, 4, 2, 5), APPENDIX_HI)
    cl, clp = characteristic(lmod), characteristic(lpmod)
    ok = cl.coeff((2, 1, 5)) == 1 and clp.coeff((1, 2, 1, 4)) == 1
    facts.append(
        Fact("L_coefficients", ok, f"[F(2,1,5)]ch L = {cl.coeff((2, 1, 5))}, "
             f"[F(1,2,1,4)]ch L' = {clp.coeff((1, 2, 1, 4))}")
    )
    return facts


def shuffle_compositions(n: int) -> list[Composition]:
    from .comb_core import compositions

    return [a for a in compositions(n) if is_shuffle_of_partition_and_ones(a)]


def ch_of(elems: Iterable[Perm]) -> QSym:
    """F-expansion of a set of permutations by complemented left descents."""
    from .qsym import from_descent_sets

    elems = list(elems)
    return from_descent_sets(len(elems[0]), (des_L(s) for s in elems))


def classic_shape(sigma: Perm) -> Composition:
    return rsk(sigma)[0].shape
