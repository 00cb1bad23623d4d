import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from brute import partial_bell_by_definition, partial_bell_by_set_partitions, set_partitions
from partcount.arith import build_divisor_table, pentagonal_lambda
from partcount.bell import (
    HessenbergSpec,
    colored_args,
    complete_bell,
    complete_bell_sequence,
    custom_args,
    dense_det_oracle,
    hessenberg_det,
    partial_bell_explicit,
    partial_bell_table,
    pentagonal_args,
    plane_args,
)
from partcount.errors import DomainError, UnsupportedSizeError
from partcount.series import TruncatedSeries


def test_argument_provenance():
    t = build_divisor_table(12)
    col = colored_args(3, 12, t)
    pl = plane_args(12, t)
    pe = pentagonal_args(12)
    for i in range(1, 13):
        assert col.x(i) == 3 * factorial(i - 1) * t.sigma(i)
        assert pl.x(i) == factorial(i - 1) * t.sigma2_of(i)
        assert pe.x(i) == pentagonal_lambda(i).value
    assert (col.provenance, col.k, pl.provenance, pe.provenance) == ("colored", 3, "plane", "pentagonal")


def test_partial_bell_examples():
    assert partial_bell_table(custom_args([1, 1, 1, 1]), 4)[4, 2] == 7
    assert partial_bell_by_set_partitions([1, 1, 1, 1], 4, 2) == 7
    xs = custom_args([3, -2, 5])
    assert partial_bell_table(xs, 3)[3, 3] == 27
    assert partial_bell_table(pentagonal_args(2), 2)[2, 2] == 1


def test_partial_bell_base_cases():
    t = partial_bell_table(custom_args([2, 3, 5, 7, 11]), 5)
    assert t[0, 0] == 1
    assert all(t[n, 0] == 0 for n in range(1, 6))
    assert t[0, 3] == 0


def test_partial_bell_short_args():
    with pytest.raises(DomainError):
        partial_bell_table(custom_args([1, 2]), 3)


@pytest.mark.parametrize("seed", range(5))
def test_partial_bell_against_set_partitions_and_definition(seed):
    rng = random.Random(seed)
    xs = [rng.randint(-5, 5) for _ in range(8)]
    t = partial_bell_table(custom_args(xs), 8)
    for n in range(1, 9):
        for l in range(1, n + 1):
            assert t[n, l] == partial_bell_by_set_partitions(xs, n, l)
            assert t[n, l] == partial_bell_by_definition(xs, n, l)


def test_partial_bell_l_max_truncates():
    xs = custom_args(range(1, 11))
    full = partial_bell_table(xs, 10)
    cut = partial_bell_table(xs, 10, l_max=3)
    for n in range(11):
        for l in range(min(n, 3) + 1):
            assert cut[n, l] == full[n, l]
        assert cut[n, 5] == 0


def test_stirling_specialisation():
    t = partial_bell_table(custom_args([1] * 8), 8)
    for n in range(1, 9):
        blocks = [len(p) for p in set_partitions(list(range(n)))]
        for l in range(1, n + 1):
            assert t[n, l] == blocks.count(l)


@pytest.mark.parametrize("seed", range(4))
def test_edge_columns_and_row_sums(seed):
    rng = random.Random(100 + seed)
    xs = custom_args([rng.randint(-9, 9) for _ in range(25)])
    t = partial_bell_table(xs, 25)
    cb = complete_bell_sequence(xs, 25)
    for n in range(1, 26):
        assert t[n, 1] == xs.x(n)
        assert t[n, n] == xs.x(1) ** n
    for n in range(26):
        assert t.row_sum(n) == cb[n]


def test_generating_function_identity():
    # coefficient of t^n/n! in (1/k!)(sum_j x_j t^j / j!)^k equals B_{n,k}
    rng = random.Random(7)
    N = 15
    xs = [rng.randint(-4, 6) for _ in range(N)]
    t = partial_bell_table(custom_args(xs), N)
    inner = TruncatedSeries((Fraction(0),) + tuple(Fraction(x, factorial(j)) for j, x in enumerate(xs, 1)))
    for k in range(0, 6):
        power = inner ** k * Fraction(1, factorial(k))
        for n in range(N + 1):
            assert power[n] * factorial(n) == t[n, k]


def test_explicit_formula_examples():
    xs = custom_args([1, 2, 3, 4])
    assert partial_bell_explicit(xs, 4, 0) == 4
    assert partial_bell_explicit(custom_args([1, 1]), 3, 1) == 3
    assert partial_bell_explicit(custom_args([1, 2, 3]), 4, 1) == partial_bell_table(custom_args([1, 2, 3, 0]), 4)[4, 2]


@pytest.mark.parametrize("seed", range(6))
def test_explicit_formula_agrees_with_recurrence(seed):
    rng = random.Random(seed)
    xs = custom_args([rng.randint(-6, 6) for _ in range(9)])
    t = partial_bell_table(xs, 9)
    for n in range(1, 10):
        for k in range(n):
            assert partial_bell_explicit(xs, n, k) == t[n, k + 1]


def test_explicit_formula_window():
    with pytest.raises(UnsupportedSizeError):
        partial_bell_explicit(custom_args([1] * 13), 13, 2)
    with pytest.raises(DomainError):
        partial_bell_explicit(custom_args([1] * 4), 3, 3)


def test_complete_bell_examples():
    assert complete_bell(custom_args([]), 0) == 1
    assert complete_bell(custom_args([2, 6]), 2) == 10
    assert complete_bell(custom_args([1, 1, 1]), 3) == 5
    bell_numbers = [sum(1 for _ in set_partitions(list(range(n)))) for n in range(9)]
    assert complete_bell_sequence(custom_args([1] * 8), 8) == bell_numbers
    with pytest.raises(DomainError):
        complete_bell(custom_args([1]), 2)


def test_hessenberg_worked_examples():
    assert HessenbergSpec((2, 6), 2).matrix() == [[2, 6], [-1, 2]]
    assert hessenberg_det(HessenbergSpec((2, 6), 2)) == 10
    spec = HessenbergSpec((1, 5, 10), 3)
    assert spec.matrix() == [[1, 5, 10], [-1, 1, 5], [0, -2, 1]]
    assert hessenberg_det(spec) == 36
    assert hessenberg_det(HessenbergSpec((-7,), 1)) == -7


def test_hessenberg_rejects_bad_spec():
    with pytest.raises(DomainError):
        HessenbergSpec((), 0)
    with pytest.raises(DomainError):
        HessenbergSpec((1, 2), 3)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=8))
def test_hessenberg_matches_dense_oracle(c):
    spec = HessenbergSpec(tuple(c), len(c))
    assert hessenberg_det(spec) == dense_det_oracle(spec.matrix())


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=12))
def test_hessenberg_matches_normalised_recurrence(c):
    # det = n! a_n with a_0 = 1, n a_n = sum_m c_m a_{n-m}, in Fractions
    n = len(c)
    a = [Fraction(1)]
    for m in range(1, n + 1):
        a.append(sum(c[j - 1] * a[m - j] for j in range(1, m + 1)) / m)
    assert hessenberg_det(HessenbergSpec(tuple(c), n)) == factorial(n) * a[n]


def test_hessenberg_equals_complete_bell():
    t = build_divisor_table(20)
    for n in range(1, 21):
        c = tuple(3 * s for s in t.sigma1[:n])
        assert hessenberg_det(HessenbergSpec(c, n)) == complete_bell(colored_args(3, n, t), n)


def test_dense_det_oracle():
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    assert dense_det_oracle(eye) == 1
    assert dense_det_oracle([[2, 6], [-1, 2]]) == 10
    rng = random.Random(3)
    for _ in range(20):
        m = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
        assert dense_det_oracle(m) == dense_det_oracle(m, along="column")
    with pytest.raises(DomainError):
        dense_det_oracle([[1, 2], [3]])
    with pytest.raises(UnsupportedSizeError):
        dense_det_oracle([[0] * 11 for _ in range(11)])
