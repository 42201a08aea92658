from fractions import Fraction

import pytest

from vpvtotients.errors import DomainError
from vpvtotients.series import (
    PowerSeries,
    finite_stirling_check,
    geometric,
    log_one_minus_z_pow,
    monomial,
    one,
    power_sum_series,
    product_with_exponents,
    ps_exp,
    ps_log,
    ps_mul,
    ps_pow_rational,
    stirling_rhs_series,
    zero,
)


def _order(series: PowerSeries) -> int:
    return len(series.coeffs) - 1


def test_mul_identity_and_commutativity():
    g = geometric(10)
    assert ps_mul(g, one(10)) == g
    m = monomial(Fraction(3), 2, 10)
    assert ps_mul(g, m) == ps_mul(m, g)


def test_geometric_times_one_minus_z():
    n = 12
    one_minus_z = PowerSeries(
        tuple([Fraction(1), Fraction(-1)] + [Fraction(0)] * (n - 1))
    )
    assert ps_mul(geometric(n), one_minus_z) == one(n)


def test_exp_log_roundtrip():
    n = 16
    coeffs = [Fraction(0)] + [Fraction((-1) ** k, k) for k in range(1, n + 1)]
    f = PowerSeries(tuple(coeffs))
    assert ps_log(ps_exp(f)) == f


def test_exp_requires_zero_constant():
    with pytest.raises((DomainError, ValueError)):
        ps_exp(one(4))


def test_log_one_minus_z_pow():
    n = 12
    for k in (1, 2, 5):
        want = [Fraction(0)] * (n + 1)
        for j in range(1, n // k + 1):
            want[j * k] = Fraction(-1, j)
        assert log_one_minus_z_pow(k, n) == PowerSeries(tuple(want))


def test_pow_rational_square_root():
    n = 10
    g = geometric(n)
    half = ps_pow_rational(g, Fraction(1, 2))
    assert ps_mul(half, half) == g


def test_partition_product():
    n = 8
    exps = {k: -1 for k in range(1, n + 1)}
    got = product_with_exponents(exps, n)
    # partition numbers p(0)..p(8)
    assert [int(c) for c in got.coeffs] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_product_with_exponents_vs_logs():
    n = 14
    exps = {1: Fraction(-1), 2: Fraction(-3, 2), 5: Fraction(2, 3)}
    direct = product_with_exponents(exps, n)
    log_sum = zero(n)
    for k, e in exps.items():
        term = log_one_minus_z_pow(k, n)
        log_sum = PowerSeries(
            tuple(a + e * b for a, b in zip(log_sum.coeffs, term.coeffs))
        )
    assert direct == ps_exp(log_sum)


def test_power_sum_series_values():
    s = power_sum_series(3, 6)
    assert s.coeffs == tuple(
        Fraction(v) for v in (0, 1, 4, 9, 16, 25, 36)
    )
    assert power_sum_series(1, 4) == geometric(4)


def test_stirling_rhs_series_low_orders():
    # m = 2: sum_j S(1, j) j! z^j / (1-z)^(j+1) has coefficient n at z^n
    s = stirling_rhs_series(2, 8)
    assert s.coeffs == tuple(Fraction(n) for n in range(9))


def test_finite_stirling_grid():
    for m in range(1, 7):
        for n in range(1, 13):
            for z in (Fraction(2), Fraction(1, 2), Fraction(-1), Fraction(1, 3)):
                assert finite_stirling_check(m, n, z)


def test_series_equality_is_exact():
    a = PowerSeries((Fraction(1), Fraction(1, 3)))
    b = PowerSeries((Fraction(1), Fraction(333333, 1000000)))
    assert a != b
