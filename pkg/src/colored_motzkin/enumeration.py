"""Exhaustive generators and exact dynamic-programming counters."""
from __future__ import annotations

from collections import defaultdict
from enum import Enum
from functools import lru_cache
from typing import Iterator


class LevelPolicy(Enum):
    ANYWHERE = "anywhere"
    FLOOR_ONLY = "floor-only"  # stand still only while the last coordinate is 0


def gen_motzkin(n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Every d-Motzkin word of length n, in lexicographic token order."""
    if n < 0 or d < 0:
        return
    h = [0] * (d + 2)
    h[0] = n + 1  # sentinel: U1 is never blocked from above
    word = [0] * n
    total = 0  # sum of all heights; every open step needs its own down step

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal total
        if i == n:
            yield tuple(word)
            return
        left = n - i - 1
        if total <= left:
            word[i] = 0
            yield from rec(i + 1)
        for k in range(1, d + 1):
            if h[k] < h[k - 1] and total + 1 <= left:
                h[k] += 1
                total += 1
                word[i] = 2 * k - 1
                yield from rec(i + 1)
                h[k] -= 1
                total -= 1
            if h[k] > h[k + 1]:
                h[k] -= 1
                total -= 1
                word[i] = 2 * k
                yield from rec(i + 1)
                h[k] += 1
                total += 1

    yield from rec(0)


def gen_syt(n: int, max_rows: int) -> Iterator[tuple[int, ...]]:
    """Every Yamanouchi word of length n with letters <= max_rows, lexicographically."""
    if n < 0 or max_rows < 0:
        return
    if max_rows == 0:
        if n == 0:
            yield ()
        return
    counts = [n + 1] + [0] * max_rows
    word = [0] * n

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if i == n:
            yield tuple(word)
            return
        for v in range(1, max_rows + 1):
            if counts[v] < counts[v - 1]:
                counts[v] += 1
                word[i] = v
                yield from rec(i + 1)
                counts[v] -= 1
            if counts[v] == 0:
                break  # rows below an empty row are empty too

    yield from rec(0)


def motzkin_counts(n_max: int, d: int, policy: LevelPolicy = LevelPolicy.ANYWHERE) -> list[int]:
    """Closed lazy walks in z_1 >= ... >= z_d >= 0, for every length 0..n_max."""
    return list(_motzkin_counts(n_max, d, LevelPolicy(policy)))


@lru_cache(maxsize=None)
def _motzkin_counts(n_max: int, d: int, policy: LevelPolicy) -> tuple[int, ...]:
    floor_only = policy is LevelPolicy.FLOOR_ONLY
    # Walks of length n at z return to the origin in n - m steps from z only if
    # sum(z) <= n - m.  Instead of pruning per target length, run one forward
    # pass and read off the origin after each step; states whose coordinate
    # sum exceeds n_max - step can never come back and are dropped.
    origin = (0,) * d
    states = {origin: 1}
    counts = [1]
    for step in range(1, n_max + 1):
        budget = n_max - step
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for z, ways in states.items():
            if not floor_only or (d > 0 and z[-1] == 0):
                if sum(z) <= budget:
                    nxt[z] += ways
            for i in range(d):
                zi = z[i]
                if i == 0 or z[i - 1] > zi:
                    w = z[:i] + (zi + 1,) + z[i + 1:]
                    if sum(w) <= budget:
                        nxt[w] += ways
                if zi > 0 and (i == d - 1 or z[i + 1] < zi):
                    nxt[z[:i] + (zi - 1,) + z[i + 1:]] += ways
        states = nxt
        counts.append(states.get(origin, 0))
    return tuple(counts)


def count_motzkin_dp(n: int, d: int, policy: LevelPolicy = LevelPolicy.ANYWHERE) -> int:
    if n < 0:
        return 0
    return _motzkin_counts(n, d, LevelPolicy(policy))[n]


@lru_cache(maxsize=None)
def _syt_counts(n_max: int, max_rows: int) -> tuple[int, ...]:
    states = {(): 1}
    counts = [1]
    for _ in range(n_max):
        nxt: dict[tuple[int, ...], int] = defaultdict(int)
        for lam, ways in states.items():
            for i in range(min(len(lam) + 1, max_rows)):
                if i == len(lam):
                    nxt[lam + (1,)] += ways
                elif i == 0 or lam[i - 1] > lam[i]:
                    nxt[lam[:i] + (lam[i] + 1,) + lam[i + 1:]] += ways
        states = nxt
        counts.append(sum(states.values()))
    return tuple(counts)


def syt_counts(n_max: int, max_rows: int) -> list[int]:
    """Standard Young tableaux with at most max_rows rows, for sizes 0..n_max."""
    return list(_syt_counts(n_max, max_rows))


def count_syt_dp(n: int, max_rows: int) -> int:
    if n < 0:
        return 0
    return _syt_counts(n, max_rows)[n]
