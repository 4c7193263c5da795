"""Exact combinatorics helpers: binomials and bounded multi-index enumeration."""

from __future__ import annotations

import math
from typing import Iterator


def binom(n: int, k: int) -> int:
    """C(n, k) as an exact integer, 0 whenever the arguments are out of range."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def sub_indices_of_order(alpha: tuple[int, ...], order: int) -> Iterator[tuple[int, ...]]:
    """All beta with 0 <= beta_i <= alpha_i and sum(beta) == order, in lex order."""
    n = len(alpha)
    # suffix_cap[i] = sum(alpha[i:]) lets us prune branches that cannot reach `order`
    suffix_cap = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix_cap[i] = suffix_cap[i + 1] + alpha[i]
    beta = [0] * n

    def rec(i: int, rem: int) -> Iterator[tuple[int, ...]]:
        if rem > suffix_cap[i]:
            return
        if i == n:
            yield tuple(beta)
            return
        for b in range(min(alpha[i], rem) + 1):
            beta[i] = b
            yield from rec(i + 1, rem - b)
        beta[i] = 0

    return rec(0, order)


def all_sub_indices(alpha: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All beta with 0 <= beta_i <= alpha_i (componentwise), in lex order."""
    n = len(alpha)
    beta = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(beta)
            return
        for b in range(alpha[i] + 1):
            beta[i] = b
            yield from rec(i + 1)
        beta[i] = 0

    return rec(0)


def lcm_all(values: Iterator[int] | list[int]) -> int:
    """Least common multiple of positive integers, 1 for an empty input."""
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
