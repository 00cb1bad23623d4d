"""Truncated formal power series with exact (int or Fraction) coefficients."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True)
class TruncatedSeries:
    """a_0 + a_1 q + ... + a_N q^N; products are truncated at q^N."""

    coeffs: tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        if order < 0:
            raise DomainError("series order must be >= 0")
        return cls((1,) + (0,) * order)

    @classmethod
    def from_terms(cls, terms: dict, order: int) -> TruncatedSeries:
        c = [0] * (order + 1)
        for e, v in terms.items():
            if 0 <= e <= order:
                c[e] += v
        return cls(tuple(c))

    def __getitem__(self, i: int):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: TruncatedSeries) -> None:
        if other.order != self.order:
            raise DomainError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(tuple(a * other for a in self.coeffs))
        self._check(other)
        n = self.order
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> TruncatedSeries:
        if e < 0:
            raise DomainError("only non-negative powers are supported")
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def times_one_minus(self, j: int, times: int = 1) -> TruncatedSeries:
        """Multiply by (1 - q^j)^times."""
        if j < 1:
            raise DomainError("j must be >= 1")
        c = list(self.coeffs)
        for _ in range(times):
            for i in range(len(c) - 1, j - 1, -1):
                c[i] -= c[i - j]
        return TruncatedSeries(tuple(c))

    def over_one_minus(self, j: int, times: int = 1) -> TruncatedSeries:
        """Multiply by (1 - q^j)^(-times), i.e. convolve with the geometric series in q^j."""
        if j < 1:
            raise DomainError("j must be >= 1")
        c = list(self.coeffs)
        for _ in range(times):
            for i in range(j, len(c)):
                c[i] += c[i - j]
        return TruncatedSeries(tuple(c))


def euler_product(order: int) -> TruncatedSeries:
    """prod_{j=1}^{order} (1 - q^j) truncated at q^order."""
    s = TruncatedSeries.one(order)
    for j in range(1, order + 1):
        s = s.times_one_minus(j)
    return s
