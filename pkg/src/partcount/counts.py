"""k-coloured partition counts p_k(n) and plane partition counts pp(n).

Every function returns a :class:`CountResult`. ``recurrence`` is the
default: it works with the normalised numbers, while the Bell and
determinant routes carry (i-1)! factors and are kept for cross-checking.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from . import oracles
from .arith import build_divisor_table, exact_div, rising_factorial
from .bell import (
    HessenbergSpec,
    colored_args,
    complete_bell,
    hessenberg_det,
    partial_bell_table,
    pentagonal_args,
    plane_args,
)
from .errors import DomainError

COLORED = "colored"
PLANE = "plane"
FAMILIES = (COLORED, PLANE)

METHODS = (
    "partial-bell",
    "complete-bell",
    "determinant",
    "recurrence",
    "oracle-series",
    "oracle-enumeration",
)
DEFAULT_METHOD = "recurrence"


@dataclass(frozen=True)
class CountResult:
    family: str
    k: int | None
    n: int
    method: str
    value: int


def _check_k(k: int) -> None:
    if not isinstance(k, int) or k < 0:
        raise DomainError(f"number of colours must be a non-negative integer, got {k!r}")


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a non-negative integer, got {n!r}")


@lru_cache(maxsize=16)
def _pentagonal_table(n: int):
    return partial_bell_table(pentagonal_args(n), n)


def pk_partial_bell(k: int, n: int) -> CountResult:
    """p_k(n) = (1/n!) sum_{l=1}^n (-1)^l k^(l) B_{n,l}(lambda)."""
    _check_k(k)
    _check_n(n)
    if n == 0:
        return CountResult(COLORED, k, 0, "partial-bell", 1)
    table = _pentagonal_table(n)
    total = 0
    for l in range(1, n + 1):
        b = table[n, l]
        if b:
            total += (-1) ** l * rising_factorial(k, l) * b
    value = exact_div(total, factorial(n), f"pk_partial_bell(k={k}, n={n})")
    return CountResult(COLORED, k, n, "partial-bell", value)


def pk_complete_bell(k: int, n: int) -> CountResult:
    _check_k(k)
    _check_n(n)
    b = complete_bell(colored_args(k, n), n)
    value = exact_div(b, factorial(n), f"pk_complete_bell(k={k}, n={n})")
    return CountResult(COLORED, k, n, "complete-bell", value)


def pk_determinant(k: int, n: int) -> CountResult:
    _check_k(k)
    _check_n(n)
    if n == 0:
        # empty determinant
        return CountResult(COLORED, k, 0, "determinant", 1)
    table = build_divisor_table(n)
    det = hessenberg_det(HessenbergSpec(tuple(k * s for s in table.sigma1), n))
    value = exact_div(det, factorial(n), f"pk_determinant(k={k}, n={n})")
    return CountResult(COLORED, k, n, "determinant", value)


def pp_complete_bell(n: int) -> CountResult:
    _check_n(n)
    b = complete_bell(plane_args(n), n)
    value = exact_div(b, factorial(n), f"pp_complete_bell(n={n})")
    return CountResult(PLANE, None, n, "complete-bell", value)


def pp_determinant(n: int) -> CountResult:
    _check_n(n)
    if n == 0:
        return CountResult(PLANE, None, 0, "determinant", 1)
    table = build_divisor_table(n)
    det = hessenberg_det(HessenbergSpec(table.sigma2, n))
    value = exact_div(det, factorial(n), f"pp_determinant(n={n})")
    return CountResult(PLANE, None, n, "determinant", value)


class _PrefixMemo:
    """Per-(family, k) prefix lists a(0..N) for the normalised recurrence.

    n a(n) = sum_{m=1}^n w(m) a(n-m), with w(m) = k sigma(m) or sigma_2(m).
    Extension happens under a lock, so concurrent callers see either the
    old or the fully extended prefix.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._tables: dict[tuple[str, int], list[int]] = {}

    def prefix(self, family: str, k: int, n: int) -> list[int]:
        key = (family, k)
        with self._lock:
            seq = self._tables.get(key)
            if seq is None or len(seq) <= n:
                seq = _recurrence_prefix(family, k, n, seq or [1])
                self._tables[key] = seq
            return seq[: n + 1]

    def clear(self) -> None:
        with self._lock:
            self._tables.clear()


def _recurrence_prefix(family: str, k: int, n: int, start: list[int]) -> list[int]:
    seq = list(start)
    if n < len(seq):
        return seq
    table = build_divisor_table(n) if n >= 1 else None
    if table is None:
        return seq
    weights = table.sigma1 if family == COLORED else table.sigma2
    scale = k if family == COLORED else 1
    for m in range(len(seq), n + 1):
        acc = 0
        for j in range(1, m + 1):
            acc += weights[j - 1] * seq[m - j]
        seq.append(exact_div(scale * acc, m, f"{family} recurrence at n={m}"))
    return seq


_memo = _PrefixMemo()


def clear_memo() -> None:
    _memo.clear()


def colored_counts(k: int, n: int) -> list[int]:
    """p_k(0), ..., p_k(n) by the normalised recurrence."""
    _check_k(k)
    _check_n(n)
    return _memo.prefix(COLORED, k, n)


def plane_counts(n: int) -> list[int]:
    """pp(0), ..., pp(n) by the normalised recurrence."""
    _check_n(n)
    return _memo.prefix(PLANE, 0, n)


def pk_recurrence(k: int, n: int) -> CountResult:
    return CountResult(COLORED, k, n, "recurrence", colored_counts(k, n)[n])


def pp_recurrence(n: int) -> CountResult:
    return CountResult(PLANE, None, n, "recurrence", plane_counts(n)[n])


def count(family: str, n: int, k: int | None = None, method: str = DEFAULT_METHOD) -> CountResult:
    """Dispatch a count by family and method name."""
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}")
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}")
    if family == COLORED:
        if k is None:
            raise DomainError("colored counts need k")
        _check_k(k)
        _check_n(n)
        if method == "oracle-series":
            value = oracles.oracle_series(COLORED, k, n)[n]
        elif method == "oracle-enumeration":
            value = oracles.oracle_enumerate_colored(k, n)
        else:
            return _COLORED_METHODS[method](k, n)
        return CountResult(COLORED, k, n, method, value)
    if k is not None:
        raise DomainError("plane counts take no k")
    _check_n(n)
    if method == "partial-bell":
        raise DomainError("partial-bell applies to colored counts only")
    if method == "oracle-series":
        value = oracles.oracle_series(PLANE, None, n)[n]
    elif method == "oracle-enumeration":
        value = oracles.oracle_enumerate_plane(n)
    else:
        return _PLANE_METHODS[method](n)
    return CountResult(PLANE, None, n, method, value)


_COLORED_METHODS = {
    "partial-bell": pk_partial_bell,
    "complete-bell": pk_complete_bell,
    "determinant": pk_determinant,
    "recurrence": pk_recurrence,
}
_PLANE_METHODS = {
    "complete-bell": pp_complete_bell,
    "determinant": pp_determinant,
    "recurrence": pp_recurrence,
}


def methods_for(family: str, include_enumeration: bool = False) -> tuple[str, ...]:
    ms = tuple(_COLORED_METHODS if family == COLORED else _PLANE_METHODS) + ("oracle-series",)
    if include_enumeration:
        ms += ("oracle-enumeration",)
    return ms
