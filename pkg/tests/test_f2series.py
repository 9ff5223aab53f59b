import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jparity.f2series import (
    BitSeries,
    DumpFormatError,
    NonUnitError,
    SeriesRangeError,
    add,
    agree,
    coeff,
    count_odd_up_to,
    dumps,
    exponents,
    first_discrepancy,
    from_exponents,
    inverse,
    loads,
    mul,
    one,
    power,
    rebase,
    shift,
    square,
    substitute_qm,
    truncate,
    zero,
)
from jparity.generators import cubic_series, euler_series, j_mod2_series, odd_square_series

from strategies import bit_series, extend


def test_from_exponents_examples():
    assert from_exponents([0], 0, 10) == one(10)
    delta = from_exponents([1, 9, 25], 0, 30)
    assert exponents(delta) == [1, 9, 25]
    assert from_exponents([3, 3], 0, 5) == zero(0, 5)


def test_from_exponents_out_of_range():
    with pytest.raises(SeriesRangeError):
        from_exponents([11], 0, 10)
    with pytest.raises(SeriesRangeError):
        from_exponents([-1], 0, 10)


def test_bits_beyond_trunc_rejected():
    with pytest.raises(SeriesRangeError):
        BitSeries(0, 2, 0b1000)


def test_add_examples():
    a = from_exponents([0, 1], 0, 10)
    b = from_exponents([0, 3], 0, 10)
    assert add(a, b) == from_exponents([1, 3], 0, 10)
    assert add(a, a) == zero(0, 10)
    assert add(a, zero(0, 10)) == a


def test_add_takes_smaller_top_and_lower_valuation():
    a = from_exponents([-1, 2], -1, 8)       # top 7
    b = from_exponents([0, 5], 0, 20)        # top 20
    s = add(a, b)
    assert (s.valuation, s.top) == (-1, 7)
    assert exponents(s) == [-1, 0, 2, 5]


def test_add_disjoint_ranges_is_error():
    with pytest.raises(SeriesRangeError):
        add(from_exponents([0], 0, 3), from_exponents([10], 10, 3))


def test_mul_examples():
    x = from_exponents([0, 1], 0, 10)
    assert mul(x, x) == from_exponents([0, 2], 0, 10)
    laurent = from_exponents([-1, 0], -1, 5)
    prod = mul(laurent, from_exponents([1], 1, 5))
    assert prod.valuation == 0
    assert exponents(prod) == [0, 1]


def test_delta_times_j_is_one():
    N = 5000
    prod = mul(odd_square_series(N), j_mod2_series(N))
    assert prod.valuation == 0
    assert agree(prod, one(N))


def test_square_examples():
    a = from_exponents([0, 1, 5], 0, 5)
    assert exponents(square(a)) == [0, 2, 10]
    assert square(a).trunc == 11
    assert square(zero(0, 4)) == zero(0, 9)


def test_square_euler_is_substitution_to_1e4():
    E = euler_series(10_000)
    assert square(E) == substitute_qm(E, 2)


def test_inverse_examples():
    assert inverse(from_exponents([0, 1], 0, 5), 5) == BitSeries(0, 5, 0b111111)
    assert inverse(one(50), 50) == one(50)


def test_inverse_errors():
    with pytest.raises(NonUnitError):
        inverse(from_exponents([1], 0, 10), 5)
    with pytest.raises(SeriesRangeError):
        inverse(one(4), 5)


def test_inverse_laurent_valuation():
    a = from_exponents([-1, 3], -1, 40)
    g = inverse(a, 40)
    assert g.valuation == 1
    assert agree(mul(a, g), one(40))


def test_pow_examples():
    a = from_exponents([0, 2, 3], 0, 40)
    assert power(a, 1) == a
    assert power(from_exponents([0, 1], 0, 20), 4) == from_exponents([0, 4], 0, 20 * 4 + 3)
    with pytest.raises(ValueError):
        power(a, 0)


def test_substitute_examples():
    a = from_exponents([0, 1], 0, 3)
    assert exponents(substitute_qm(a, 8)) == [0, 8]
    assert substitute_qm(a, 8).top == 31
    assert substitute_qm(a, 1) == a
    d4 = substitute_qm(odd_square_series(100), 4)
    assert d4.valuation == 4 and exponents(d4)[0] == 4


def test_shift_examples():
    assert shift(one(3), -1) == BitSeries(-1, 3, 1)
    a = from_exponents([2, 7], 0, 9)
    assert shift(shift(a, 5), -5) == a


def test_j_is_shifted_cubic_q8():
    N = 4000
    rhs = shift(substitute_qm(cubic_series((N + 1) // 8), 8), -1)
    assert agree(j_mod2_series(N), rhs, upto=N)


def test_coeff_examples():
    delta = odd_square_series(30)
    assert coeff(delta, 9) == 1
    assert coeff(delta, 4) == 0
    assert coeff(j_mod2_series(10), -1) == 1
    with pytest.raises(SeriesRangeError):
        coeff(delta, 31)
    assert delta[25] == 1


def test_count_odd_examples():
    assert count_odd_up_to(odd_square_series(30), 25) == 3
    assert count_odd_up_to(zero(0, 100), 100) == 0
    assert count_odd_up_to(cubic_series(10), 4) == 4
    with pytest.raises(SeriesRangeError):
        count_odd_up_to(zero(0, 5), 6)


def test_first_discrepancy_reports_lowest():
    a = from_exponents([0, 5, 9], 0, 20)
    b = from_exponents([0, 9, 12], 0, 15)
    assert first_discrepancy(a, b) == 5
    assert first_discrepancy(a, b, upto=4) is None


def test_truncate_and_rebase():
    a = from_exponents([1, 4, 9], 1, 9)
    assert exponents(truncate(a, 5)) == [1, 4]
    with pytest.raises(SeriesRangeError):
        truncate(a, 11)
    r = rebase(a, -2)
    assert r.valuation == -2 and r.top == a.top and exponents(r) == exponents(a)


# ---------------------------------------------------------------- properties

@given(bit_series(unit=True, max_trunc=400), st.integers(0, 400))
def test_inverse_round_trip(a, n):
    n = min(n, a.trunc)
    g = inverse(a, n)
    assert g.valuation == -a.valuation
    assert agree(mul(a, g), one(n))


@settings(max_examples=8)
@given(st.integers(0, 2**32), st.integers(1, 2**16))
def test_inverse_round_trip_sparse_large(seed, N):
    import random

    rng = random.Random(seed)
    exps = {0} | {rng.randrange(1, N + 1) for _ in range(rng.randint(1, 40))}
    a = from_exponents(sorted(exps), 0, N)
    assert agree(mul(a, inverse(a, N)), one(N))


@given(bit_series())
def test_frobenius(a):
    s = square(a)
    assert s == substitute_qm(a, 2)
    assert agree(s, mul(a, a))


@given(bit_series(), bit_series())
def test_mul_commutative(a, b):
    assert mul(a, b) == mul(b, a)


@given(bit_series(), bit_series(), bit_series())
def test_mul_associative(a, b, c):
    assert mul(mul(a, b), c) == mul(a, mul(b, c))


@given(bit_series(), bit_series(), st.integers(-50, 50))
def test_shift_commutes_with_mul(a, b, s):
    assert shift(mul(a, b), s) == mul(shift(a, s), b)


@given(bit_series(max_trunc=120), st.integers(1, 6), st.integers(1, 6))
def test_pow_additive(a, i, j):
    assert agree(power(a, i + j), mul(power(a, i), power(a, j)))


@given(bit_series(max_trunc=80), st.integers(1, 7))
def test_pow_matches_repeated_mul(a, k):
    acc = a
    for _ in range(k - 1):
        acc = mul(acc, a)
    assert agree(power(a, k), acc)


@given(bit_series())
def test_count_monotone(a):
    counts = [count_odd_up_to(a, x) for x in range(a.valuation - 2, a.top + 1)]
    assert all(x <= y for x, y in zip(counts, counts[1:]))
    assert counts[-1] == a.bits.bit_count()


@given(bit_series())
def test_dump_round_trip(a):
    text = dumps(a)
    assert text.endswith("\n") and text.count("\n") == 2
    assert loads(text) == a


# The truncation contract: extending inputs with arbitrary higher
# coefficients must not change any coefficient a result claims to know.

@given(bit_series(), bit_series(), st.integers(1, 64), st.integers(0, 2**64))
def test_mul_claims_only_determined_bits(a, b, extra, noise):
    r = mul(a, b)
    r2 = mul(extend(a, extra, noise), extend(b, extra, noise >> 7))
    assert agree(r, r2, upto=r.top)


@given(bit_series(), bit_series(), st.integers(1, 64), st.integers(0, 2**64))
def test_add_claims_only_determined_bits(a, b, extra, noise):
    try:
        r = add(a, b)
    except SeriesRangeError:
        return
    r2 = add(extend(a, extra, noise), extend(b, extra, noise >> 5))
    assert agree(r, r2, upto=r.top)


@given(bit_series(), st.integers(1, 64), st.integers(0, 2**64), st.integers(1, 9))
def test_square_and_substitute_claim_only_determined_bits(a, extra, noise, m):
    big = extend(a, extra, noise)
    assert agree(square(a), square(big), upto=square(a).top)
    assert agree(substitute_qm(a, m), substitute_qm(big, m), upto=substitute_qm(a, m).top)


@given(bit_series(unit=True), st.integers(1, 64), st.integers(0, 2**64))
def test_inverse_claims_only_determined_bits(a, extra, noise):
    g = inverse(a, a.trunc)
    g2 = inverse(extend(a, extra, noise), a.trunc + extra)
    assert agree(g, g2, upto=g.top)


@given(bit_series(max_trunc=60), st.integers(1, 5), st.integers(1, 64), st.integers(0, 2**64))
def test_pow_claims_only_determined_bits(a, k, extra, noise):
    r = power(a, k)
    assert agree(r, power(extend(a, extra, noise), k), upto=r.top)


# ---------------------------------------------------------------- dump format

def test_dump_layout_is_little_endian():
    a = from_exponents([0, 9], 0, 15)
    assert dumps(a) == "F2SERIES v1 valuation=0 trunc=15\n0102\n"
    a = from_exponents([-1], -1, 3)
    assert dumps(a) == "F2SERIES v1 valuation=-1 trunc=3\n01\n"


@pytest.mark.parametrize("text", [
    "F2SERIES v2 valuation=0 trunc=3\n01\n",
    "F2SERIES v1 valuation=0 trunc=3\n01",
    "F2SERIES v1 valuation=0 trunc=3\n0A\n",
    "F2SERIES v1 valuation=0 trunc=3\n0101\n",
    "F2SERIES v1 valuation=0 trunc=3\n10\n",
    "F2SERIES v1 valuation=x trunc=3\n01\n",
    "F2SERIES v1 trunc=3 valuation=0\n01\n",
])
def test_loads_rejects_malformed(text):
    with pytest.raises(DumpFormatError):
        loads(text)
