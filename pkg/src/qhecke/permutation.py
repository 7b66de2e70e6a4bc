"""Permutations in one-line notation and the left weak order.

A permutation of [n] is a tuple ``(w1, ..., wn)`` of the values 1..n.
Products compose right to left: ``compose(s, t)[k] = s[t[k]]``, so left
multiplication acts on values and right multiplication on positions.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from itertools import permutations as _itperms

from .comb_core import comp_of, set_of
from .errors import DomainError, guard

Perm = tuple[int, ...]


def as_perm(word: Iterable[int]) -> Perm:
    """Explicit conversion from a word of distinct letters 1..n to a permutation."""
    w = tuple(int(x) for x in word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise DomainError(f"not a permutation of [{len(w)}]: {w}")
    return w


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if "," in text or " " in text:
        parts = [p for p in text.replace(",", " ").split() if p]
    else:
        parts = list(text)
    try:
        return as_perm(int(p) for p in parts)
    except ValueError:
        raise DomainError(f"malformed permutation literal {text!r}") from None


def format_perm(sigma: Perm) -> str:
    if len(sigma) <= 9:
        return "".join(map(str, sigma))
    return ",".join(map(str, sigma))


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def all_perms(n: int) -> Iterator[Perm]:
    return _itperms(range(1, n + 1))


def inverse(sigma: Perm) -> Perm:
    inv = [0] * len(sigma)
    for pos, val in enumerate(sigma, 1):
        inv[val - 1] = pos
    return tuple(inv)


def compose(sigma: Perm, tau: Perm) -> Perm:
    if len(sigma) != len(tau):
        raise DomainError("cannot compose permutations of different sizes")
    return tuple(sigma[t - 1] for t in tau)


def inv_L(sigma: Perm) -> frozenset[tuple[int, int]]:
    n = len(sigma)
    return frozenset(
        (i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j]
    )


def length(sigma: Perm) -> int:
    n = len(sigma)
    return sum(1 for i in range(n) for j in range(i + 1, n) if sigma[i] > sigma[j])


def des_L(sigma: Perm) -> frozenset[int]:
    """Values i with i+1 to the left of i in the one-line word."""
    pos = inverse(sigma)
    return frozenset(i for i in range(1, len(sigma)) if pos[i - 1] > pos[i])


def s_left(i: int, sigma: Perm) -> Perm:
    """s_i * sigma: swap the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in sigma)


def leq_L(sigma: Perm, rho: Perm) -> bool:
    if len(sigma) != len(rho):
        raise DomainError("weak order comparison needs equal sizes")
    return inv_L(sigma) <= inv_L(rho)


def interval(lo: Perm, hi: Perm) -> frozenset[Perm]:
    """All gamma with lo <=_L gamma <=_L hi, found by upward search from lo."""
    if not leq_L(lo, hi):
        raise DomainError(f"empty interval: {format_perm(lo)} is not below {format_perm(hi)}")
    hi_inv = inv_L(hi)
    seen = {lo}
    queue = deque([lo])
    while queue:
        g = queue.popleft()
        d = des_L(g)
        for i in range(1, len(g)):
            if i in d:
                continue
            up = s_left(i, g)
            if up not in seen and inv_L(up) <= hi_inv:
                seen.add(up)
                queue.append(up)
    return frozenset(seen)


def w0(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def _reverse_blocks(blocks: Iterable[int]) -> Perm:
    out: list[int] = []
    start = 0
    for block in blocks:
        out.extend(range(start + block, start, -1))
        start += block
    return tuple(out)


def w0_parabolic(generators: Iterable[int], n: int) -> Perm:
    """Longest element of the subgroup generated by s_i for i in ``generators``.

    Its blocks are the maximal runs of consecutive generators, i.e. the parts
    of comp([n-1] minus the generator set).
    """
    gens = set(generators)
    if any(i < 1 or i > n - 1 for i in gens):
        raise DomainError(f"generator set {sorted(gens)} is not contained in [1, {n - 1}]")
    return _reverse_blocks(comp_of(set(range(1, n)) - gens, n))


def w0_alpha(alpha: tuple[int, ...]) -> Perm:
    """w0(set(alpha)): blocks given by the complement composition of alpha."""
    return w0_parabolic(set_of(alpha), sum(alpha))


def times_w0(sigma: Perm) -> Perm:
    """sigma * w0, i.e. the reversed word."""
    return tuple(reversed(sigma))


def conj_w0(sigma: Perm) -> Perm:
    n = len(sigma)
    return tuple(n + 1 - v for v in reversed(sigma))


def reduced_word(sigma: Perm) -> tuple[int, ...]:
    """A reduced word (i1, ..., ip) with sigma = s_i1 ... s_ip."""
    word = []
    g = sigma
    while True:
        d = des_L(g)
        if not d:
            break
        i = min(d)
        word.append(i)
        g = s_left(i, g)
    return tuple(word)


def knuth_neighbors(sigma: Perm) -> set[Perm]:
    out = set()
    w = list(sigma)
    for j in range(len(w) - 2):
        a, b, c = w[j], w[j + 1], w[j + 2]
        # yzx <-> yxz with x < y < z: swap the last two
        if c < a < b or b < a < c:
            out.add(tuple(w[: j + 1] + [c, b] + w[j + 3 :]))
        # zxy <-> xzy with x < y < z: swap the first two
        if b < c < a or a < c < b:
            out.add(tuple(w[:j] + [b, a] + w[j + 2 :]))
    return out


def knuth_class(sigma: Perm) -> frozenset[Perm]:
    guard(len(sigma), 10, "knuth_class")
    seen = {sigma}
    stack = [sigma]
    while stack:
        for nb in knuth_neighbors(stack.pop()):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return frozenset(seen)


def dual_knuth_class(sigma: Perm) -> frozenset[Perm]:
    return frozenset(inverse(r) for r in knuth_class(inverse(sigma)))
