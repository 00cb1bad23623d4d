"""Independent correctness oracles: generating-function series and brute-force enumeration."""

from __future__ import annotations

from .arith import generalized_pentagonals
from .errors import DomainError, UnsupportedSizeError
from .series import TruncatedSeries

ENUM_MAX_N = 12
ENUM_MAX_K = 4


def oracle_series(family: str, k: int | None, order: int) -> TruncatedSeries:
    """Coefficients of prod_{j<=order} (1 - q^j)^(-e_j), e_j = k (colored) or j (plane)."""
    if order < 0:
        raise DomainError("series order must be >= 0")
    if family == "colored":
        if k is None or k < 0:
            raise DomainError("colored series needs k >= 0")
    elif family != "plane":
        raise DomainError(f"unknown family {family!r}")
    s = TruncatedSeries.one(order)
    for j in range(1, order + 1):
        s = s.over_one_minus(j, k if family == "colored" else j)
    return s


def iter_colored_partitions(k: int, n: int):
    """Yield k-coloured partitions of n as tuples of (part, colour), colour in 1..k.

    Pairs come out in non-increasing (part, colour) order, which makes each
    multiset appear exactly once.
    """

    def rec(rest, top):
        if rest == 0:
            yield ()
            return
        part_hi, colour_hi = top
        for part in range(min(rest, part_hi), 0, -1):
            for colour in range(colour_hi if part == part_hi else k, 0, -1):
                for tail in rec(rest - part, (part, colour)):
                    yield ((part, colour),) + tail

    yield from rec(n, (n, k))


def iter_plane_partitions(n: int):
    """Yield plane partitions of n as tuples of rows (each a non-increasing tuple)."""

    def rows_under(bound, rest):
        # non-empty non-increasing rows r with r[j] <= bound[j], sum(r) <= rest
        def rec(j, cap, left):
            if j > 0:
                yield ()
            if j >= len(bound):
                return
            for v in range(min(cap, bound[j], left), 0, -1):
                for tail in rec(j + 1, v, left - v):
                    yield (v,) + tail

        for r in rec(0, rest, rest):
            if r:
                yield r

    def rec(bound, rest):
        if rest == 0:
            yield ()
            return
        for row in rows_under(bound, rest):
            for below in rec(row, rest - sum(row)):
                yield (row,) + below

    if n == 0:
        yield ()
        return
    yield from rec((n,) * n, n)


def oracle_enumerate_colored(k: int, n: int) -> int:
    if n < 0 or k < 0:
        raise DomainError("n and k must be >= 0")
    if n > ENUM_MAX_N or k > ENUM_MAX_K:
        raise UnsupportedSizeError(f"colored enumeration limited to n <= {ENUM_MAX_N}, k <= {ENUM_MAX_K}")
    return sum(1 for _ in iter_colored_partitions(k, n))


def oracle_enumerate_plane(n: int) -> int:
    if n < 0:
        raise DomainError("n must be >= 0")
    if n > ENUM_MAX_N:
        raise UnsupportedSizeError(f"plane enumeration limited to n <= {ENUM_MAX_N}")
    return sum(1 for _ in iter_plane_partitions(n))


def partition_numbers(n: int) -> list[int]:
    """p(0..n) by Euler's recurrence over generalized pentagonal numbers."""
    if n < 0:
        raise DomainError("n must be >= 0")
    pentas = list(generalized_pentagonals(n))
    p = [1] + [0] * n
    for i in range(1, n + 1):
        acc = 0
        for m, g in pentas:
            if g > i:
                break
            acc += p[i - g] if m % 2 else -p[i - g]
        p[i] = acc
    return p
