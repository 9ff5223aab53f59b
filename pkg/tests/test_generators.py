from math import isqrt

import pytest

from jparity import generators as gen
from jparity.f2series import (
    agree,
    coeff,
    count_odd_up_to,
    exponents,
    mul,
    one,
    power,
    rebase,
    shift,
    substitute_qm,
)

from oracles import c_enum, p_enum


def test_euler_exponents():
    assert exponents(gen.euler_series(12)) == [0, 1, 2, 5, 7, 12]
    assert coeff(gen.euler_series(12), 3) == 0


def test_euler_matches_product_expansion():
    # expand prod (1 - q^i) mod 2 factor by factor
    N = 300
    acc = one(N)
    for i in range(1, N + 1):
        acc = mul(acc, _binomial(i, N))
    assert agree(acc, gen.euler_series(N))


def _binomial(i, N):
    from jparity.f2series import from_exponents
    return from_exponents([0, i], 0, N)


def test_euler_times_partition_is_one():
    N = 2000
    assert agree(mul(gen.euler_series(N), gen.partition_series(1, N)), one(N))


def test_triangular():
    assert exponents(gen.triangular_series(10)) == [0, 1, 3, 6, 10]
    assert coeff(gen.triangular_series(10), 2) == 0
    N = 5000
    assert agree(gen.triangular_series(N), power(gen.euler_series(N), 3))


def test_odd_squares():
    d = gen.odd_square_series(50)
    assert exponents(d) == [1, 9, 25, 49]
    assert d.valuation == 1 and d.top == 50
    N = 20000
    big = gen.odd_square_series(N)
    assert agree(big, shift(gen.eta_power(24, N - 1), 1))
    for x in (1, 8, 9, 10, 24, 25, 26, 999, N):
        assert count_odd_up_to(big, x) == (isqrt(x) + 1) // 2


def test_eta_power_binary_route():
    N = 3000
    assert gen.eta_power(1, N) == gen.euler_series(N)
    assert agree(gen.eta_power(2, N), substitute_qm(gen.euler_series(N // 2), 2))
    assert agree(gen.eta_power(3, N), gen.triangular_series(N))
    for e in (5, 6, 11, 21, 24):
        assert agree(gen.eta_power(e, N), power(gen.euler_series(N), e))


def test_eta_power_step():
    N = 4000
    assert agree(gen.eta_power(21, N, step=8),
                 substitute_qm(gen.eta_power(21, N // 8), 8))


def test_partition_series_small():
    bits = [coeff(gen.partition_series(1, 9), n) for n in range(10)]
    assert bits == [p_enum(n) % 2 for n in range(10)] == [1, 1, 0, 1, 1, 1, 1, 1, 0, 0]


def test_partition_b3_is_cubic():
    N = 10000
    assert agree(gen.partition_series(3, N), gen.cubic_series(N))


@pytest.mark.parametrize("s", [1, 2, 3])
def test_partition_power_of_two(s):
    N = 4000
    m = 1 << s
    assert agree(gen.partition_series(m, N),
                 substitute_qm(gen.partition_series(1, N // m), m))


def test_cubic_small_and_inverse():
    c = gen.cubic_series(20)
    assert [coeff(c, n) for n in range(15)] == [c_enum(n) % 2 for n in range(15)]
    assert [coeff(c, n) for n in range(5)] == [1, 1, 1, 0, 1]
    N = 8000
    assert agree(mul(gen.triangular_series(N), gen.cubic_series(N)), one(N))


def test_j_series():
    j = gen.j_mod2_series(100)
    assert j.valuation == -1 and j.top == 100
    assert coeff(j, -1) == 1
    assert coeff(j, 1) == 0
    N = 6000
    rhs = shift(substitute_qm(gen.cubic_series((N + 1) // 8), 8), -1)
    assert agree(gen.j_mod2_series(N), rhs, upto=N)


def test_delta_power():
    N = 3000
    d = gen.odd_square_series(N)
    assert agree(gen.delta_power(1, N), d)
    assert exponents(gen.delta_power(2, N)) == [2 * e for e in exponents(d) if 2 * e <= N]
    d7 = gen.delta_power(7, N)
    assert agree(d7, shift(gen.eta_power(21, N - 7, step=8), 7))


def test_r_parity_series_vs_bruteforce():
    from jparity.quadrep import R_bruteforce

    r = rebase(gen.r_parity_series(2000), 0)
    for n in range(1, 2001):
        assert coeff(r, n) == R_bruteforce(n) % 2, n


@pytest.mark.parametrize("name,family,idx", [
    ("p", "p", 1), ("c", "c", 1), ("j", "j", 1), ("R", "R", 1), ("P7", "P", 7),
    ("delta", "delta", 1), ("delta21", "delta", 21), ("eta", "eta", 1), ("eta24", "eta", 24),
])
def test_parse_name(name, family, idx):
    assert gen.parse_name(name) == (family, idx)


@pytest.mark.parametrize("name", ["x", "P0", "delta0", "P", "Delta", "eta0", ""])
def test_parse_name_rejects(name):
    with pytest.raises(KeyError):
        gen.parse_name(name)


def test_named_series_dispatch():
    N = 500
    assert gen.named_series("c", N) == gen.cubic_series(N)
    assert gen.named_series("P3", N) == gen.partition_series(3, N)
    assert gen.named_series("delta5", N) == gen.delta_power(5, N)


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        gen.euler_series(-1)
