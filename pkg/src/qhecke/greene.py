"""k-increasing subsequences, initial-entry sets and the shape predictor for P-hat."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from functools import lru_cache
from itertools import combinations

from .comb_core import Composition, set_key
from .errors import CertificateError, DomainError, guard
from .insertion import rsk
from .permutation import knuth_class

IncTuple = tuple[tuple[int, ...], ...]


def _longest_decreasing(word: Sequence[int]) -> int:
    best: list[int] = []
    for i, x in enumerate(word):
        best.append(1 + max((best[j] for j in range(i) if word[j] > x), default=0))
    return max(best, default=0)


@lru_cache(maxsize=100_000)
def _k_increasing_dp(word: tuple[int, ...], k: int) -> int:
    # state: sorted tuple of the last letters of the k parts (0 = empty part)
    states: dict[tuple[int, ...], int] = {(0,) * k: 0}
    for x in word:
        nxt = dict(states)
        for lasts, total in states.items():
            seen = set()
            for p, last in enumerate(lasts):
                if last < x and last not in seen:
                    seen.add(last)
                    key = tuple(sorted(lasts[:p] + (x,) + lasts[p + 1 :]))
                    if nxt.get(key, -1) < total + 1:
                        nxt[key] = total + 1
        states = nxt
    return max(states.values())


def longest_k_increasing(word: Sequence[int], k: int) -> int:
    """Maximum total length of k pairwise disjoint increasing subsequences."""
    if k < 1:
        raise DomainError("k must be at least 1")
    return _k_increasing_dp(tuple(word), k)


def longest_k_increasing_by_decreasing(word: Sequence[int], k: int) -> int:
    """Longest subsequence with no decreasing subsequence of length k+1.

    Exhaustive over subsets, largest first; intended for short words.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    word = tuple(word)
    for size in range(len(word), -1, -1):
        for idx in combinations(range(len(word)), size):
            if _longest_decreasing([word[i] for i in idx]) <= k:
                return size
    return 0


def _check_distinct(word: Sequence[int]) -> None:
    if len(set(word)) != len(word):
        raise DomainError("initial-entry sets need a word of distinct letters")


def inc_k_tuples(word: Sequence[int], k: int) -> list[IncTuple]:
    """All k-tuples of disjoint increasing subsequences of maximal total length."""
    word = tuple(word)
    guard(len(word), 10, "inc_k_tuples")
    _check_distinct(word)
    target = longest_k_increasing(word, k)
    parts: list[list[int]] = [[] for _ in range(k)]
    out: list[IncTuple] = []

    def rec(pos: int, used: int) -> None:
        if used + (len(word) - pos) < target:
            return
        if pos == len(word):
            out.append(tuple(tuple(p) for p in parts))
            return
        x = word[pos]
        for p in parts:
            if not p or p[-1] < x:
                p.append(x)
                rec(pos + 1, used + 1)
                p.pop()
        rec(pos + 1, used)

    rec(0, 0)
    return out


def ies(u: IncTuple) -> frozenset[int]:
    return frozenset(p[0] for p in u if p)


def shape_length(word: Sequence[int]) -> int:
    return len(rsk(tuple(word))[0].rows)


def _mies_dp(word: tuple[int, ...], k: int) -> frozenset[int]:
    target = longest_k_increasing(word, k)
    # key: (sorted last letters with 0 for empty parts, starts) -> best length
    states: dict[tuple[tuple[int, ...], frozenset[int]], int] = {((0,) * k, frozenset()): 0}
    n = len(word)
    for pos, x in enumerate(word):
        remaining = n - pos - 1
        nxt: dict[tuple[tuple[int, ...], frozenset[int]], int] = {}

        def push(key, total):
            if total + remaining >= target and nxt.get(key, -1) < total:
                nxt[key] = total

        for (lasts, starts), total in states.items():
            push((lasts, starts), total)
            seen = set()
            for p, last in enumerate(lasts):
                if last < x and last not in seen:
                    seen.add(last)
                    new_starts = starts | {x} if last == 0 else starts
                    key = tuple(sorted(lasts[:p] + (x,) + lasts[p + 1 :]))
                    push((key, new_starts), total + 1)
        states = nxt
    best = [s for (_, s), total in states.items() if total == target]
    return max(best, key=set_key)


def mies(word: Sequence[int], k: int) -> frozenset[int]:
    """Maximal initial-entry set over optimal k-tuples, size first then lex."""
    word = tuple(word)
    _check_distinct(word)
    if k == 0:
        return frozenset()
    if k < 0 or k > len(word):
        raise DomainError(f"k={k} outside 0..{len(word)}")
    return _mies_dp(word, k)


def mies_bruteforce(word: Sequence[int], k: int) -> frozenset[int]:
    if k == 0:
        return frozenset()
    return max((ies(u) for u in inc_k_tuples(word, k)), key=set_key)


def mies_chain(word: Sequence[int]) -> list[frozenset[int]]:
    return [mies(word, k) for k in range(shape_length(word) + 1)]


def predict_shape(word: Sequence[int]) -> Composition:
    """Shape of P-hat from the chain of maximal initial-entry sets."""
    word = tuple(word)
    _check_distinct(word)
    lam = tuple(len(r) for r in rsk(word)[0].rows)
    chain = mies_chain(word)
    for a, b in zip(chain, chain[1:]):
        if not (a < b and len(b) == len(a) + 1):
            raise CertificateError(f"initial-entry sets do not form a chain: {chain}")
    xs = sorted(chain[-1])
    return tuple(lam[min(t for t, s in enumerate(chain) if x in s) - 1] for x in xs)


def knuth_invariance_check(sigma: Sequence[int], k: int) -> bool:
    sigma = tuple(sigma)
    guard(len(sigma), 7, "knuth_invariance_check")
    target = mies(sigma, k)
    return all(mies(rho, k) == target for rho in knuth_class(sigma))


def iter_words(length: int, alphabet: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for w in iter_words(length - 1, alphabet):
        for a in range(1, alphabet + 1):
            yield (*w, a)
