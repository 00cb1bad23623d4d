"""Cross-method verification sweeps, shared by ``partcount verify`` and the tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial

from . import counts
from .arith import pentagonal_lambda
from .oracles import (
    oracle_enumerate_colored,
    oracle_enumerate_plane,
    oracle_series,
    partition_numbers,
)
from .series import euler_product


class Mismatch(Exception):
    def __init__(self, check: str, family: str, k, n: int, values: dict):
        self.check, self.family, self.k, self.n, self.values = check, family, k, n, values
        shown = ", ".join(f"{m}={v}" for m, v in values.items())
        super().__init__(f"{check}: mismatch at family={family} k={k} n={n}: {shown}")


@dataclass
class CheckSummary:
    name: str
    checks: int = 0
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        return f"PASS {self.name}: {self.checks} checks"


def _agree(check, family, k, n, values):
    if len(set(values.values())) != 1:
        raise Mismatch(check, family, k, n, values)


def colored_agreement(max_k: int, max_n: int) -> CheckSummary:
    s = CheckSummary("colored-agreement")
    for k in range(1, max_k + 1):
        series = oracle_series("colored", k, max_n)
        rec = counts.colored_counts(k, max_n)
        for n in range(max_n + 1):
            vals = {
                "partial-bell": counts.pk_partial_bell(k, n).value,
                "complete-bell": counts.pk_complete_bell(k, n).value,
                "determinant": counts.pk_determinant(k, n).value,
                "recurrence": rec[n],
                "oracle-series": series[n],
            }
            _agree(s.name, "colored", k, n, vals)
            s.checks += 1
    return s


def plane_agreement(max_n: int) -> CheckSummary:
    s = CheckSummary("plane-agreement")
    series = oracle_series("plane", None, max_n)
    rec = counts.plane_counts(max_n)
    for n in range(max_n + 1):
        vals = {
            "complete-bell": counts.pp_complete_bell(n).value,
            "determinant": counts.pp_determinant(n).value,
            "recurrence": rec[n],
            "oracle-series": series[n],
        }
        _agree(s.name, "plane", None, n, vals)
        s.checks += 1
    return s


def enumeration_agreement(max_k: int, max_n: int) -> CheckSummary:
    """Brute force vs every method inside the enumeration window."""
    s = CheckSummary("enumeration-agreement")
    for k in range(1, max_k + 1):
        for n in range(max_n + 1):
            vals = {m: counts.count("colored", n, k, m).value for m in counts.methods_for("colored")}
            vals["oracle-enumeration"] = oracle_enumerate_colored(k, n)
            _agree(s.name, "colored", k, n, vals)
            s.checks += 1
    for n in range(max_n + 1):
        vals = {m: counts.count("plane", n, None, m).value for m in counts.methods_for("plane")}
        vals["oracle-enumeration"] = oracle_enumerate_plane(n)
        _agree(s.name, "plane", None, n, vals)
        s.checks += 1
    return s


def pentagonal_identity(order: int) -> CheckSummary:
    s = CheckSummary("pentagonal-identity")
    prod = euler_product(order)
    for i in range(order + 1):
        expected = 1 if i == 0 else pentagonal_lambda(i).value // factorial(i)
        if prod[i] != expected:
            raise Mismatch(s.name, "euler-product", None, i, {"product": prod[i], "lambda/i!": expected})
        s.checks += 1
    return s


def classical_reduction(max_n: int) -> CheckSummary:
    s = CheckSummary("p1-classical-recurrence")
    classical = partition_numbers(max_n)
    ours = counts.colored_counts(1, max_n)
    for n in range(max_n + 1):
        _agree(s.name, "colored", 1, n, {"recurrence": ours[n], "euler": classical[n]})
        s.checks += 1
    return s


def monotonicity(max_k: int, max_n: int) -> CheckSummary:
    s = CheckSummary("monotonicity")
    tables = [counts.colored_counts(k, max_n) for k in range(1, max_k + 1)]
    for ki, t in enumerate(tables):
        for n in range(1, max_n + 1):
            if t[n] < t[n - 1]:
                raise Mismatch(s.name, "colored", ki + 1, n, {"p(n-1)": t[n - 1], "p(n)": t[n]})
            if ki and not t[n] > tables[ki - 1][n]:
                raise Mismatch(s.name, "colored", ki + 1, n, {"p_{k-1}": tables[ki - 1][n], "p_k": t[n]})
            s.checks += 1
    return s


def run_all(max_n: int, max_k: int, enum_n: int = 10, enum_k: int = 3):
    """Yield one summary per check family; raises Mismatch on the first failure."""
    yield colored_agreement(max_k, max_n)
    yield plane_agreement(max_n)
    yield enumeration_agreement(min(max_k, enum_k), min(max_n, enum_n))
    yield pentagonal_identity(max_n)
    yield classical_reduction(max_n)
    yield monotonicity(max_k, max_n)
