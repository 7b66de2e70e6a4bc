"""Exhaustive property suites shared by the ``sweep`` command and the tests."""

from __future__ import annotations

import random
import time
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from math import factorial

from .comb_core import (
    compositions,
    is_shuffle_of_partition_and_ones,
    is_simple,
    lambda_sort,
    reverse,
)
from .errors import QHeckeError
from .filtration import (
    K_alpha,
    K_characterizations,
    Y_module,
    filtration_V,
    filtration_X,
    surjection_chain,
)
from .greene import predict_shape
from .hecke import (
    characteristic,
    iso_check,
    module_V,
    module_X,
    theta_V,
    theta_X,
    verify_relations,
)
from .hecke import interval_module
from .insertion import rsk, rsk_hat
from .permutation import all_perms, des_L, inverse, s_left
from .qsym import dual_immaculate_F, extended_schur_F, qsum, young_quasischur_F
from .tableaux import des_hatS, enumerate_family


@dataclass(frozen=True)
class SuiteResult:
    name: str
    n: int
    cases: int
    failures: list[str]
    seconds: float

    @property
    def ok(self) -> bool:
        return not self.failures


def _run(name: str, n: int, body: Callable[[], Iterator[tuple[object, bool]]]) -> SuiteResult:
    start = time.perf_counter()
    cases, failures = 0, []
    try:
        for case, ok in body():
            cases += 1
            if not ok:
                failures.append(str(case))
    except QHeckeError as exc:
        failures.append(f"{type(exc).__name__}: {exc}")
    return SuiteResult(name, n, cases, failures, time.perf_counter() - start)


def _comps(upto: int, shuffle: bool = False) -> Iterator[tuple[int, ...]]:
    for m in range(1, upto + 1):
        for a in compositions(m):
            if not shuffle or is_shuffle_of_partition_and_ones(a):
                yield a


def bijection(n: int) -> SuiteResult:
    def body():
        seen = {}
        for s in all_perms(n):
            p, q = rsk_hat(s)
            key = (p, q)
            ok = (
                key not in seen
                and enumerate_family("SYCT", p.shape).count(p) == 1
                and enumerate_family("SYCT", q.shape).count(q) == 1
                and lambda_sort(p.shape) == lambda_sort(q.shape)
            )
            seen[key] = s
            yield s, ok
        total = sum(
            len(enumerate_family("SYCT", a)) * len(enumerate_family("SYCT", b))
            for a in compositions(n)
            for b in compositions(n)
            if lambda_sort(a) == lambda_sort(b)
        )
        yield "count", total == factorial(n) == len(seen)

    return _run("bijection", n, body)


def symmetry(n: int) -> SuiteResult:
    def body():
        for s in all_perms(n):
            p, q = rsk_hat(s)
            pi, qi = rsk_hat(inverse(s))
            yield s, (
                pi == q
                and qi == p
                and des_L(s) == des_hatS(p)
                and lambda_sort(p.shape) == rsk(s)[0].shape
            )

    return _run("symmetry_descent_shape", n, body)


def greene_shape(n: int) -> SuiteResult:
    def body():
        for s in all_perms(n):
            yield s, predict_shape(s) == rsk_hat(s)[0].shape

    return _run("greene_shape", n, body)


def relations(n: int) -> SuiteResult:
    def body():
        for a in _comps(n):
            yield ("V", a), verify_relations(module_V(a))
            yield ("X", a), verify_relations(module_X(a))

    return _run("hecke_relations", n, body)


def random_intervals(n: int, count: int = 200, seed: int = 0) -> SuiteResult:
    """Hecke relations on ``count`` seeded random nonempty intervals of S_n."""
    perms = list(all_perms(n))

    def body():
        rng = random.Random(seed)
        for _ in range(count):
            lo = hi = rng.choice(perms)
            # random upward walk in the left weak order
            for _ in range(rng.randint(0, n * (n - 1) // 2)):
                ups = [i for i in range(1, n) if i not in des_L(hi)]
                if not ups:
                    break
                hi = s_left(rng.choice(ups), hi)
            yield (lo, hi), verify_relations(interval_module(lo, hi))

    return _run("interval_relations", n, body)


def tableau_modules(n: int) -> SuiteResult:
    def body():
        for a in _comps(n):
            yield ("ch V", a), characteristic(module_V(a)) == dual_immaculate_F(a)
            yield ("ch X", a), characteristic(module_X(a)) == extended_schur_F(a)
            yield ("Theta_V", a), iso_check(theta_V(a))
            yield ("Theta_X", a), iso_check(theta_X(a))

    return _run("tableau_modules", n, body)


def filtrations_V(n: int) -> SuiteResult:
    def body():
        for a in _comps(n):
            reports = [filtration_V(a, tb) for tb in ("lex", "revlex")]
            total = qsum(sum(a), (young_quasischur_F(s.gamma) for s in reports[0].strata))
            last = [frozenset(r.strata[-1].members) for r in reports]
            yield a, (
                all(r.submodule_chain_ok for r in reports)
                and total == dual_immaculate_F(a)
                and last[0] == last[1] == K_alpha(a)
            )

    return _run("filtration_V", n, body)


def filtrations_X(n: int) -> SuiteResult:
    def body():
        for a in _comps(n, shuffle=True):
            r = filtration_X(a)
            total = qsum(sum(a), (young_quasischur_F(s.gamma) for s in r.strata))
            yield a, r.submodule_chain_ok and total == extended_schur_F(a)

    return _run("filtration_X", n, body)


def y_modules(n: int) -> SuiteResult:
    def body():
        for a in _comps(n):
            y = Y_module(a)
            yield ("Y", a), verify_relations(y) and characteristic(y) == young_quasischur_F(a)
        for a in _comps(n, shuffle=True):
            yield ("K", a), K_characterizations(a)

    return _run("Y_modules", n, body)


def surjections(n: int) -> SuiteResult:
    def body():
        for a in _comps(n):
            chain = surjection_chain(a)
            iso = iso_check(chain.upsilon)
            same_dim = len(enumerate_family("SYCT_C", a)) == len(K_alpha(a))
            yield a, all(chain.checks.values()) and iso == is_simple(reverse(a)) == same_dim

    return _run("surjection_chain", n, body)


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "bijection": bijection,
    "symmetry_descent_shape": symmetry,
    "greene_shape": greene_shape,
    "hecke_relations": relations,
    "interval_relations": random_intervals,
    "tableau_modules": tableau_modules,
    "filtration_V": filtrations_V,
    "filtration_X": filtrations_X,
    "Y_modules": y_modules,
    "surjection_chain": surjections,
}


def run_all(n: int) -> list[SuiteResult]:
    return [fn(n) for fn in SUITES.values()]
