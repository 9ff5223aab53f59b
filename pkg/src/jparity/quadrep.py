"""Representation counts by X^2 + Y^2 + Z^2 + 4W^2, divisor sums, 2-adic valuations.

``R(n)`` counts ordered tuples of odd positive integers (X, Y, Z, W) with
``X^2 + Y^2 + Z^2 + 4W^2 = n``. For n = 7 mod 8 it equals sigma(n)/8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt, log
from typing import Iterator, Optional

import numpy as np


class ConsistencyError(RuntimeError):
    """An arithmetic identity that must hold exactly did not."""


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"bad factor list {self.factors}")
            prod *= p ** e
            last = p
        if prod != self.n:
            raise ValueError(f"factors of {self.n} multiply to {prod}")


@dataclass(frozen=True)
class SemiprimeRecord:
    n: int
    p: int
    q: int
    sigma: int
    v2sigma: int


class Sieve:
    """Smallest-prime-factor table up to ``limit``, shared read-only."""

    def __init__(self, limit: int):
        limit = max(int(limit), 2)
        spf = np.zeros(limit + 1, dtype=np.int64 if limit >= 2**31 else np.int32)
        for p in range(2, isqrt(limit) + 1):
            if spf[p] == 0:
                tail = spf[p * p::p]
                tail[tail == 0] = p
        idx = np.flatnonzero(spf == 0)
        spf[idx] = idx
        spf[:2] = 0
        self.limit = limit
        self.spf = spf

    def primes(self, upto: Optional[int] = None) -> np.ndarray:
        upto = self.limit if upto is None else min(upto, self.limit)
        idx = np.arange(upto + 1, dtype=np.int64)
        return idx[(self.spf[:upto + 1] == idx) & (idx >= 2)]

    def factorize(self, n: int) -> Factorization:
        if n > self.limit:
            return _trial_factorize(n)
        factors = []
        while n > 1:
            p = int(self.spf[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        return Factorization(_prod(factors), tuple(factors))

    def sigma_many(self, ns: np.ndarray) -> np.ndarray:
        """sigma(n) for each entry, through the prime-power product formula."""
        rest = np.asarray(ns, dtype=np.int64).copy()
        if rest.size and (rest.min() < 1 or rest.max() > self.limit):
            raise ValueError("values outside the sieve range")
        total = np.ones_like(rest)
        active = rest > 1
        while active.any():
            m = rest[active]
            p = self.spf[m].astype(np.int64)
            # geometric sum 1 + p + ... + p^a, accumulated one power at a time
            term = np.ones_like(m)
            acc = np.ones_like(m)
            while True:
                div = m % p == 0
                if not div.any():
                    break
                m = np.where(div, m // p, m)
                term = np.where(div, term * p, term)
                acc = np.where(div, acc + term, acc)
            total[active] *= acc
            rest[active] = m
            active = rest > 1
        return total


def _prod(factors) -> int:
    out = 1
    for p, e in factors:
        out *= p ** e
    return out


def _trial_factorize(n: int) -> Factorization:
    original = n
    factors = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        factors.append((n, 1))
    return Factorization(original, tuple(factors))


@lru_cache(maxsize=4)
def sieve(limit: int) -> Sieve:
    return Sieve(limit)


_DEFAULT_SIEVE_LIMIT = 1 << 20


def factorize(n: int) -> Factorization:
    if n < 1:
        raise ValueError("n must be positive")
    if n <= _DEFAULT_SIEVE_LIMIT:
        return sieve(_DEFAULT_SIEVE_LIMIT).factorize(n)
    return _trial_factorize(n)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n).factors == ((n, 1),)


def sigma(n: int) -> int:
    """Divisor sum from the factorization: prod (1 + p + ... + p^a)."""
    total = 1
    for p, a in factorize(n).factors:
        total *= (p ** (a + 1) - 1) // (p - 1)
    return total


def sigma_naive(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d
            if d * d != n:
                total += n // d
    return total


def sigma_table(limit: int) -> np.ndarray:
    """sigma(0..limit) as int64 (entry 0 is 0), by a divisor-pair sieve."""
    sig = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, isqrt(limit) + 1):
        # pairs (d, m) with d <= m and d*m <= limit
        m = np.arange(d, limit // d + 1, dtype=np.int64)
        contrib = d + m
        contrib[0] = d
        sig[d * d::d] += contrib
    return sig


def v2(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return (n & -n).bit_length() - 1


def M_jacobi(n: int) -> int:
    """8 * sum of the divisors of n not divisible by 4."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            for e in {d, n // d}:
                if e % 4:
                    total += e
    return 8 * total


def four_square_count(n: int) -> int:
    """Exhaustive count of integer (X, Y, Z, T), signs and order distinct."""
    r = isqrt(n)
    count = 0
    for x in range(-r, r + 1):
        rx = n - x * x
        for y in range(-isqrt(rx), isqrt(rx) + 1):
            ry = rx - y * y
            for z in range(-isqrt(ry), isqrt(ry) + 1):
                rz = ry - z * z
                t = isqrt(rz)
                if t * t == rz:
                    count += 1 if t == 0 else 2
    return count


def four_square_count_table(limit: int) -> np.ndarray:
    """Same count for every n <= limit, by convolving the square indicator."""
    sq = np.zeros(limit + 1, dtype=np.int64)
    for x in range(isqrt(limit) + 1):
        sq[x * x] += 1 if x == 0 else 2
    out = sq
    for _ in range(3):
        out = np.convolve(out, sq)[:limit + 1]
    return out


def four_square_representations(n: int) -> Iterator[tuple[int, int, int, int]]:
    r = isqrt(n)
    for x in range(-r, r + 1):
        rx = n - x * x
        for y in range(-isqrt(rx), isqrt(rx) + 1):
            ry = rx - y * y
            for z in range(-isqrt(ry), isqrt(ry) + 1):
                rz = ry - z * z
                t = isqrt(rz)
                if t * t == rz:
                    yield (x, y, z, t)
                    if t:
                        yield (x, y, z, -t)


def R_bruteforce(n: int) -> int:
    """Count odd positive (X, Y, Z, W) with X^2 + Y^2 + Z^2 + 4W^2 = n."""
    if n < 1:
        raise ValueError("n must be positive")
    count = 0
    for x in range(1, isqrt(n) + 1, 2):
        for y in range(1, isqrt(n - x * x) + 1, 2):
            for z in range(1, isqrt(n - x * x - y * y) + 1, 2):
                rest = n - x * x - y * y - z * z
                if rest > 0 and rest % 4 == 0:
                    w = isqrt(rest // 4)
                    if w * w * 4 == rest and w % 2:
                        count += 1
    return count


def R_bruteforce_table(limit: int) -> np.ndarray:
    """R(0..limit) by enumerating every tuple, grouped by partial sums.

    X^2 + Y^2 is 2 mod 8 and Z^2 + 4W^2 is 5 mod 8, so each pair histogram
    is stored on its residue class and the two are convolved exactly.
    """
    odd = np.arange(1, isqrt(limit) + 1, 2, dtype=np.int64)
    sq = odd * odd
    xy = (sq[:, None] + sq[None, :]).ravel()
    zw = (sq[:, None] + 4 * sq[None, :]).ravel()
    xy, zw = xy[xy <= limit], zw[zw <= limit]
    size = limit // 8 + 1
    a = np.bincount((xy - 2) // 8, minlength=size)[:size]
    b = np.bincount((zw - 5) // 8, minlength=size)[:size]
    conv = np.convolve(a, b)[:size]
    out = np.zeros(limit + 1, dtype=np.int64)
    idx = 8 * np.arange(size) + 7
    keep = idx <= limit
    out[idx[keep]] = conv[keep]
    return out


def R_fast(n: int) -> int:
    """sigma(n)/8 for n = 7 mod 8, else 0."""
    if n < 1:
        raise ValueError("n must be positive")
    if n % 8 != 7:
        return 0
    s = sigma(n)
    if s % 8:
        raise ConsistencyError(f"sigma({n}) = {s} is not divisible by 8")
    return s // 8


def R_fast_table(limit: int, sig: Optional[np.ndarray] = None) -> np.ndarray:
    if sig is None:
        sig = sigma_table(limit)
    out = np.zeros(limit + 1, dtype=np.int64)
    sel = sig[7::8]
    if np.any(sel % 8):
        bad = 7 + 8 * int(np.flatnonzero(sel % 8)[0])
        raise ConsistencyError(f"sigma({bad}) is not divisible by 8")
    out[7::8] = sel // 8
    return out


def semiprime_census(x: int, sv: Optional[Sieve] = None) -> list[SemiprimeRecord]:
    """All n = p*q <= x with primes p = 3, q = 5 (mod 8), sorted by n.

    Each record's v2(sigma(n)) is computed from the factorization and
    checked to be 3.
    """
    if x < 15:
        raise ValueError("census bound must be at least 15")
    if sv is None or sv.limit < x:
        sv = Sieve(x)
    primes = sv.primes(x // 3)
    p3 = primes[primes % 8 == 3]
    q5 = primes[primes % 8 == 5]
    ps, qs = [], []
    for p in p3[p3 * 5 <= x]:
        hi = np.searchsorted(q5, x // p, side="right")
        ps.append(np.full(hi, p, dtype=np.int64))
        qs.append(q5[:hi])
    if not ps:
        return []
    p_arr = np.concatenate(ps)
    q_arr = np.concatenate(qs)
    n_arr = p_arr * q_arr
    order = np.argsort(n_arr, kind="stable")
    n_arr, p_arr, q_arr = n_arr[order], p_arr[order], q_arr[order]
    sig = sv.sigma_many(n_arr)
    v2s = np.log2(sig & -sig).astype(np.int64)
    bad = np.flatnonzero((v2s != 3) | (n_arr % 8 != 7))
    if bad.size:
        i = int(bad[0])
        raise ConsistencyError(
            f"n={int(n_arr[i])}: v2(sigma)={int(v2s[i])}, n mod 8={int(n_arr[i]) % 8}")
    return [SemiprimeRecord(int(n), int(p), int(q), int(s), int(v))
            for n, p, q, s, v in zip(n_arr, p_arr, q_arr, sig, v2s)]


def f1_R(x: int, sig: Optional[np.ndarray] = None) -> int:
    """Number of n <= x with R(n) odd."""
    if x < 1:
        raise ValueError("x must be positive")
    if sig is None:
        sig = sigma_table(x)
    r = R_fast_table(x, sig)
    odd = int(np.count_nonzero(r[1:x + 1] & 1))
    s7 = sig[7:x + 1:8]
    by_valuation = int(np.count_nonzero((s7 & -s7) == 8))
    if odd != by_valuation:
        raise ConsistencyError(f"odd R count {odd} != v2(sigma)=3 count {by_valuation}")
    return odd


def semiprime_reference(x: float) -> float:
    """x log log x / log x."""
    return x * log(log(x)) / log(x)


def M_jacobi_table(limit: int) -> np.ndarray:
    """M_jacobi(0..limit); entry 0 is 0."""
    acc = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        if d % 4:
            acc[d::d] += d
    return 8 * acc


def quadrep_chain_discrepancy(limit: int) -> Optional[int]:
    """First n = 7 mod 8 up to limit where R, M/64 and sigma/8 disagree."""
    r = R_bruteforce_table(limit)
    m = M_jacobi_table(limit)
    s = sigma_table(limit)
    for n in range(7, limit + 1, 8):
        if not (64 * r[n] == m[n] and 8 * r[n] == s[n]):
            return n
    return None


def jacobi_discrepancy(limit: int) -> Optional[int]:
    """First n <= limit where M_jacobi differs from the exhaustive count."""
    exhaustive = four_square_count_table(limit)
    m = M_jacobi_table(limit)
    bad = np.flatnonzero(exhaustive[1:] != m[1:])
    return int(bad[0]) + 1 if bad.size else None
