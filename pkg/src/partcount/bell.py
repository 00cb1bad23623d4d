"""Partial and complete Bell polynomials over exact integer arguments.

Three routes are offered: the triangular recurrence (production), the
explicit nested-sum formula (small sizes, testing), and the Hessenberg
determinant that encodes the complete polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .arith import DivisorSumTable, build_divisor_table, exact_div, generalized_pentagonals
from .errors import DomainError, UnsupportedSizeError

EXPLICIT_MAX_N = 12
DENSE_DET_MAX_N = 10


@dataclass(frozen=True)
class BellArgumentSequence:
    """Arguments x_1..x_N, stored 0-based in ``values``."""

    values: tuple[int, ...]
    provenance: str = "custom"
    k: int | None = None

    def __len__(self) -> int:
        return len(self.values)

    def x(self, i: int) -> int:
        return self.values[i - 1]


def custom_args(values) -> BellArgumentSequence:
    return BellArgumentSequence(tuple(int(v) for v in values), "custom")


def pentagonal_args(n: int) -> BellArgumentSequence:
    """lambda_1..lambda_n: (-1)^m i! on generalized pentagonal i, zero elsewhere."""
    vals = [0] * n
    for m, i in generalized_pentagonals(n):
        vals[i - 1] = (-1) ** m * factorial(i)
    return BellArgumentSequence(tuple(vals), "pentagonal")


def colored_args(k: int, n: int, table: DivisorSumTable | None = None) -> BellArgumentSequence:
    """x_i = k (i-1)! sigma(i)."""
    if k < 0:
        raise DomainError(f"number of colours must be >= 0, got {k}")
    table = _ensure_table(table, n)
    vals = []
    f = 1
    for i in range(1, n + 1):
        vals.append(k * f * table.sigma1[i - 1])
        f *= i
    return BellArgumentSequence(tuple(vals), "colored", k)


def plane_args(n: int, table: DivisorSumTable | None = None) -> BellArgumentSequence:
    """x_i = (i-1)! sigma_2(i)."""
    table = _ensure_table(table, n)
    vals = []
    f = 1
    for i in range(1, n + 1):
        vals.append(f * table.sigma2[i - 1])
        f *= i
    return BellArgumentSequence(tuple(vals), "plane")


def _ensure_table(table, n):
    if n == 0:
        return DivisorSumTable(0, (), ())
    if table is None or table.max_n < n:
        return build_divisor_table(n)
    return table


def _check_len(args: BellArgumentSequence, n: int) -> None:
    if len(args) < n:
        raise DomainError(f"need {n} Bell arguments, got {len(args)}")


@dataclass(frozen=True)
class PartialBellTable:
    """Triangle ``entries[n][l] = B_{n,l}`` for 0 <= l <= min(n, l_max)."""

    n_max: int
    entries: tuple[tuple[int, ...], ...]
    args: BellArgumentSequence

    def __getitem__(self, nl: tuple[int, int]) -> int:
        n, l = nl
        row = self.entries[n]
        return row[l] if l < len(row) else 0

    def row_sum(self, n: int) -> int:
        return sum(self.entries[n])


def partial_bell_table(args: BellArgumentSequence, n_max: int, l_max: int | None = None) -> PartialBellTable:
    """Fill B_{n,l} = sum_i C(n-1, i-1) x_i B_{n-i, l-1}, skipping zero x_i."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    _check_len(args, n_max)
    if l_max is None:
        l_max = n_max
    xs = args.values
    nonzero = [i for i in range(1, n_max + 1) if xs[i - 1]]
    rows: list[list[int]] = [[1]]
    for n in range(1, n_max + 1):
        width = min(n, l_max) + 1
        row = [0] * width
        for i in nonzero:
            if i > n:
                break
            w = comb(n - 1, i - 1) * xs[i - 1]
            prev = rows[n - i]
            # B_{n-i, l-1} is zero once l-1 > n-i
            for l in range(1, min(width, n - i + 2)):
                b = prev[l - 1] if l - 1 < len(prev) else 0
                if b:
                    row[l] += w * b
        rows.append(row)
    return PartialBellTable(n_max, tuple(tuple(r) for r in rows), args)


def partial_bell_explicit(args: BellArgumentSequence, n: int, k: int) -> int:
    """B_{n,k+1} by the k-fold nested binomial sum, divided by (k+1)!.

    Note the offset: ``k`` counts nesting levels, the result has k+1 blocks.
    Exponential in k, so only n <= 12 is accepted.
    """
    if k < 0 or n < k + 1:
        raise DomainError(f"explicit formula needs n >= k+1 >= 1, got n={n}, k={k}")
    if n > EXPLICIT_MAX_N:
        raise UnsupportedSizeError(f"explicit formula capped at n <= {EXPLICIT_MAX_N}")
    # only x_1..x_{n-k} occur
    _check_len(args, n - k)
    x = args.x
    if k == 0:
        return x(n)

    def nest(level: int, upper: int, weight: int) -> int:
        # alpha_level runs over [k - level + 1, upper - 1]
        total = 0
        lo = k - level + 1
        for a in range(lo, upper):
            w = weight * comb(upper, a) * x(upper - a)
            if not w:
                continue
            if level == k:
                total += w * x(a)
            else:
                total += nest(level + 1, a, w)
        return total

    return exact_div(nest(1, n, 1), factorial(k + 1), "explicit partial Bell formula")


def complete_bell_sequence(args: BellArgumentSequence, n: int) -> list[int]:
    """B_0..B_n via B_{m+1} = sum_i C(m, i) B_{m-i} x_{i+1}."""
    if n < 0:
        raise DomainError("n must be >= 0")
    _check_len(args, n)
    xs = args.values
    out = [1]
    for m in range(n):
        acc = 0
        for i in range(m + 1):
            if xs[i]:
                acc += comb(m, i) * out[m - i] * xs[i]
        out.append(acc)
    return out


def complete_bell(args: BellArgumentSequence, n: int) -> int:
    return complete_bell_sequence(args, n)[n]


@dataclass(frozen=True)
class HessenbergSpec:
    """n x n matrix with M[i][j] = c_{j-i+1} (j >= i), M[i][i-1] = -(i-1), zero below."""

    c: tuple[int, ...]
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("Hessenberg dimension must be >= 1")
        if len(self.c) < self.n:
            raise DomainError(f"need {self.n} generators, got {len(self.c)}")

    def entry(self, i: int, j: int) -> int:
        """1-based entry."""
        if j >= i:
            return self.c[j - i]
        if j == i - 1:
            return -(i - 1)
        return 0

    def matrix(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]


def hessenberg_det(spec: HessenbergSpec) -> int:
    """Division-free O(n^2) determinant by expanding the last column.

    With D_0 = 1 and s_j the subdiagonal entry of row j,
    D_m = sum_r M[r][m] * prod_{j=r+1..m} (-s_j) * D_{r-1}.
    """
    dets = [1]
    for m in range(1, spec.n + 1):
        acc = 0
        weight = 1
        for r in range(m, 0, -1):
            acc += spec.entry(r, m) * weight * dets[r - 1]
            if r > 1:
                weight *= -spec.entry(r, r - 1)
        dets.append(acc)
    return dets[spec.n]


def dense_det_oracle(matrix, along: str = "row") -> int:
    """Cofactor expansion along the first row (or column); exponential, n <= 10."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DomainError("matrix is not square")
    if n > DENSE_DET_MAX_N:
        raise UnsupportedSizeError(f"cofactor oracle capped at n <= {DENSE_DET_MAX_N}")
    if along == "column":
        rows = [list(c) for c in zip(*rows)] if n else rows
    elif along != "row":
        raise DomainError(f"unknown expansion {along!r}")
    return _cofactor(rows)


def _cofactor(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j, a in enumerate(m[0]):
        if a:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            total += (-1) ** j * a * _cofactor(minor)
    return total
