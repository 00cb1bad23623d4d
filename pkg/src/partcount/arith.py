"""Exact integer primitives: factorials, binomials, divisor sums, pentagonal numbers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isqrt

from .errors import DomainError, InconsistencyError


def factorial(n: int) -> int:
    if n < 0:
        raise DomainError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, r: int) -> int:
    if n < 0 or r < 0 or r > n:
        raise DomainError(f"binomial({n}, {r}) requires 0 <= r <= n")
    return math.comb(n, r)


def rising_factorial(k: int, l: int) -> int:
    """Return k (k+1) ... (k+l-1); the empty product (l = 0) is 1.

    k = 0 is allowed and gives 0 for every l >= 1.
    """
    if k < 0 or l < 0:
        raise DomainError(f"rising_factorial({k}, {l}) requires k, l >= 0")
    out = 1
    for j in range(k, k + l):
        out *= j
    return out


def exact_div(num: int, den: int, what: str = "") -> int:
    """Divide, insisting on a zero remainder."""
    q, r = divmod(num, den)
    if r:
        raise InconsistencyError(f"inexact division {num} / {den}" + (f" in {what}" if what else ""))
    return q


@dataclass(frozen=True)
class DivisorSumTable:
    """sigma(m) and sigma_2(m) for 1 <= m <= max_n.

    The tuples are stored 0-based (``sigma1[0]`` is sigma(1)); use
    :meth:`sigma` / :meth:`sigma2_of` for 1-based lookups.
    """

    max_n: int
    sigma1: tuple[int, ...]
    sigma2: tuple[int, ...]

    def sigma(self, m: int) -> int:
        if not 1 <= m <= self.max_n:
            raise DomainError(f"sigma({m}) outside table 1..{self.max_n}")
        return self.sigma1[m - 1]

    def sigma2_of(self, m: int) -> int:
        if not 1 <= m <= self.max_n:
            raise DomainError(f"sigma2({m}) outside table 1..{self.max_n}")
        return self.sigma2[m - 1]


def build_divisor_table(max_n: int) -> DivisorSumTable:
    """Sieve sigma and sigma_2 together over multiples of each d."""
    if max_n < 1:
        raise DomainError("build_divisor_table needs max_n >= 1")
    s1 = [0] * (max_n + 1)
    s2 = [0] * (max_n + 1)
    for d in range(1, max_n + 1):
        dd = d * d
        for m in range(d, max_n + 1, d):
            s1[m] += d
            s2[m] += dd
    return DivisorSumTable(max_n, tuple(s1[1:]), tuple(s2[1:]))


@dataclass(frozen=True)
class PentagonalCoefficient:
    """lambda_i: (-1)^m i! when i = m(3m -+ 1)/2, else 0 (m and sign are None)."""

    index: int
    m: int | None
    sign: int | None
    value: int


def pentagonal_lambda(i: int) -> PentagonalCoefficient:
    if i < 1:
        raise DomainError(f"pentagonal index must be positive, got {i}")
    # integer-only scan; m(3m-1)/2 > i for every m past this bound
    for m in range(1, isqrt(2 * i // 3) + 2):
        if m * (3 * m - 1) // 2 == i or m * (3 * m + 1) // 2 == i:
            sign = -1 if m % 2 else 1
            return PentagonalCoefficient(i, m, sign, sign * math.factorial(i))
    return PentagonalCoefficient(i, None, None, 0)


def generalized_pentagonals(limit: int):
    """Yield (m, i) for generalized pentagonal numbers i <= limit, increasing in i."""
    m = 1
    while True:
        a = m * (3 * m - 1) // 2
        if a > limit:
            return
        yield m, a
        b = a + m
        if b <= limit:
            yield m, b
        m += 1
