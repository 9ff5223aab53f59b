"""Named q-series reduced mod 2.

Closed-form series (Euler product, triangular numbers, odd squares) are
built by enumerating exponents directly. Everything else is derived with
f2series arithmetic, so each closed form has an independent product route
to be checked against.

All ``N`` arguments are absolute exponent bounds: the returned series is
determined at least through ``q**N``.
"""

from __future__ import annotations

import re
from math import isqrt

from .f2series import (
    BitSeries,
    from_exponents,
    inverse,
    mul,
    power,
    shift,
    substitute_qm,
    truncate,
    zero,
)


def _check_degree(N: int):
    if N < 0:
        raise ValueError(f"degree bound must be non-negative, got {N}")


def pentagonal_exponents(N: int) -> list[int]:
    """Generalized pentagonal numbers k(3k-1)/2, k in Z, up to N."""
    out = [0]
    k = 1
    while k * (3 * k - 1) // 2 <= N:
        out.append(k * (3 * k - 1) // 2)
        if k * (3 * k + 1) // 2 <= N:
            out.append(k * (3 * k + 1) // 2)
        k += 1
    return out


def euler_series(N: int) -> BitSeries:
    """prod (1 - q^i) mod 2, from the pentagonal number theorem."""
    _check_degree(N)
    return from_exponents(pentagonal_exponents(N), 0, N)


def triangular_series(N: int) -> BitSeries:
    """sum q^(n(n+1)/2)."""
    _check_degree(N)
    exps = []
    n = 0
    while n * (n + 1) // 2 <= N:
        exps.append(n * (n + 1) // 2)
        n += 1
    return from_exponents(exps, 0, N)


def odd_square_series(N: int) -> BitSeries:
    """Delta(q) = sum q^((2n+1)^2), stored from valuation 1."""
    _check_degree(N)
    if N < 1:
        return zero(0, N)
    exps = [(2 * n + 1) ** 2 for n in range((isqrt(N) + 1) // 2)]
    return from_exponents(exps, 1, N - 1)


def eta_power(e: int, N: int, step: int = 1) -> BitSeries:
    """prod (1 - q^(step*i))^e mod 2.

    Built as the product, over set bits j of e, of the Euler series in
    q^(step * 2^j), since (1 - x)^2 = 1 + x^2 mod 2.
    """
    if e < 1:
        raise ValueError("exponent must be positive")
    if step < 1:
        raise ValueError("step must be positive")
    _check_degree(N)
    result = None
    j = 0
    while e >> j:
        if (e >> j) & 1:
            m = step << j
            factor = substitute_qm(euler_series(N // m), m)
            result = factor if result is None else mul(result, factor)
        j += 1
    return truncate(result, N)


def partition_series(b: int, N: int) -> BitSeries:
    """P_b mod 2: coefficients of 1 / prod (1 - q^i)^b."""
    return inverse(eta_power(b, N), N)


def cubic_series(N: int) -> BitSeries:
    """Cubic partitions c(n) mod 2: 1 / prod (1 - q^i)(1 - q^(2i))."""
    _check_degree(N)
    denom = mul(euler_series(N), substitute_qm(euler_series(N // 2), 2))
    return inverse(truncate(denom, N), N)


def j_mod2_series(N: int) -> BitSeries:
    """Klein j mod 2 as 1 / (q prod (1 - q^i)^24); valuation -1, through q^N."""
    _check_degree(N)
    return inverse(shift(eta_power(24, N + 1), 1), N + 1)


def delta_power(k: int, N: int) -> BitSeries:
    """Delta(q)^k, determined through q^N (or its valuation, if larger)."""
    if k < 1:
        raise ValueError("exponent must be positive")
    result = power(odd_square_series(N), k)
    return truncate(result, max(N, result.valuation))


def r_parity_series(N: int) -> BitSeries:
    """Delta(q)^3 * Delta(q^4): parities of the odd four-square count R(n)."""
    _check_degree(N)
    d3 = delta_power(3, N)
    d4 = substitute_qm(odd_square_series(N // 4), 4)
    return truncate(mul(d3, d4), max(N, 7))


_NAMED = re.compile(r"^(?:(p|c|j|R|triangular)|P(\d+)|delta(\d*)|eta(\d*))$")


def series_names() -> list[str]:
    return ["p", "c", "j", "R", "triangular", "P<b>", "delta", "delta<k>",
            "eta", "eta<e>"]


def parse_name(name: str) -> tuple[str, int]:
    """Split a catalog name like ``P5`` or ``delta7`` into (family, index)."""
    m = _NAMED.match(name)
    if m is None:
        raise KeyError(f"unknown series {name!r}; known: {', '.join(series_names())}")
    plain, b, k, e = m.groups()
    if plain is not None:
        return plain, 1
    if b is not None:
        if int(b) < 1:
            raise KeyError(f"P index must be positive in {name!r}")
        return "P", int(b)
    if k is not None:
        if k and int(k) < 1:
            raise KeyError(f"delta power must be positive in {name!r}")
        return "delta", int(k) if k else 1
    if e and int(e) < 1:
        raise KeyError(f"eta power must be positive in {name!r}")
    return "eta", int(e) if e else 1


def named_series(name: str, N: int) -> BitSeries:
    """Build a catalog series by name (see :func:`series_names`)."""
    family, idx = parse_name(name)
    if family == "p":
        return partition_series(1, N)
    if family == "c":
        return cubic_series(N)
    if family == "j":
        return j_mod2_series(N)
    if family == "R":
        return r_parity_series(N)
    if family == "triangular":
        return triangular_series(N)
    if family == "P":
        return partition_series(idx, N)
    if family == "delta":
        return delta_power(idx, N)
    return eta_power(idx, N)
