"""Exact partition counting by recurrence (never by enumeration).

``count_partitions`` uses the pentagonal-number recurrence
p(k) = sum_j (-1)^(j+1) [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)] with a shared
memo table, so values up to k ~ 10^4 are immediate.  ``count_with_parts`` and
``count_at_most_parts`` use the classical two-variable recurrences.
"""

from __future__ import annotations

import threading
from functools import lru_cache

__all__ = [
    "count_partitions",
    "count_with_parts",
    "count_at_most_parts",
    "pentagonal_index",
    "is_pentagonal",
]

_lock = threading.Lock()
_ptable = [1]  # p(0)


def count_partitions(k: int) -> int:
    """p(k): number of partitions of k; p(0) = 1."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k < len(_ptable):
        return _ptable[k]
    with _lock:
        while len(_ptable) <= k:
            n = len(_ptable)
            total = 0
            j = 1
            while True:
                g1 = j * (3 * j - 1) // 2
                if g1 > n:
                    break
                sign = 1 if j % 2 else -1
                total += sign * _ptable[n - g1]
                g2 = j * (3 * j + 1) // 2
                if g2 <= n:
                    total += sign * _ptable[n - g2]
                j += 1
            _ptable.append(total)
    return _ptable[k]


@lru_cache(maxsize=None)
def count_with_parts(k: int, m: int) -> int:
    """|k; m|: partitions of k with exactly m parts.

    Recurrence |k; m| = |k-1; m-1| + |k-m; m|.
    """
    if k < 1 or m < 1 or m > k:
        raise ValueError("need 1 <= m <= k")
    return _with_parts(k, m)


def _with_parts(k: int, m: int) -> int:
    # T[kk][mm] = |kk; mm|, filled iteratively; T[0][0] = 1 seeds the bases
    width = m + 1
    table = [[0] * width for _ in range(k + 1)]
    table[0][0] = 1
    for kk in range(1, k + 1):
        for mm in range(1, min(kk, m) + 1):
            val = table[kk - 1][mm - 1]
            if kk - mm >= 0:
                val += table[kk - mm][mm]
            table[kk][mm] = val
    return table[k][m]


def count_at_most_parts(k: int, m: int) -> int:
    """P(k, m): partitions of k with at most m parts.

    Recurrence P(k, m) = P(k, m-1) + P(k-m, m); P(k, 1) = 1, P(0, m) = 1.
    """
    if k < 0 or m < 1:
        raise ValueError("need k >= 0 and m >= 1")
    return _at_most(k, m)


@lru_cache(maxsize=None)
def _at_most(k: int, m: int) -> int:
    if k == 0:
        return 1
    if m > k:
        m = k
    if m == 1:
        return 1
    return _at_most(k, m - 1) + _at_most(k - m, m)


def pentagonal_index(k: int) -> int:
    """j >= 1 with k = j(3j -+ 1)/2, else 0.  Integer arithmetic only."""
    if k < 1:
        return 0
    # 3j^2 - j - 2k = 0  ->  j = (1 + sqrt(1 + 24k)) / 6
    from math import isqrt

    d = 1 + 24 * k
    r = isqrt(d)
    if r * r == d:
        if (1 + r) % 6 == 0:
            return (1 + r) // 6
        if (r - 1) % 6 == 0 and (r - 1) // 6 > 0:
            return (r - 1) // 6
    return 0


def is_pentagonal(k: int) -> bool:
    """True for k of the form j(3j +- 1)/2 with j >= 1."""
    return pentagonal_index(k) > 0
