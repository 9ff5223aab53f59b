"""Exact integer q-series at small degree: ground truth for the mod-2 engine."""

from __future__ import annotations

from dataclasses import dataclass

from .f2series import BitSeries

DEFAULT_CAP = 512


class OracleCapError(RuntimeError):
    """Requested degree exceeds the oracle's configured cap."""


class ExactDivisionError(ArithmeticError):
    """A series division step left a nonzero remainder."""


@dataclass(frozen=True)
class IntSeries:
    valuation: int
    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient count must equal trunc + 1")

    @property
    def top(self) -> int:
        return self.valuation + self.trunc

    def __getitem__(self, n: int) -> int:
        if not self.valuation <= n <= self.top:
            raise IndexError(f"exponent {n} outside [{self.valuation}, {self.top}]")
        return self.coeffs[n - self.valuation]

    def parity(self) -> BitSeries:
        """Reduce mod 2 into a :class:`BitSeries` on the same range."""
        bits = 0
        for i, c in enumerate(self.coeffs):
            if c & 1:
                bits |= 1 << i
        return BitSeries(self.valuation, self.trunc, bits)


def _check_cap(N: int, cap: int):
    if N < 0:
        raise ValueError("degree bound must be non-negative")
    if N > cap:
        raise OracleCapError(f"degree {N} exceeds oracle cap {cap}")


def _mul(a: list[int], b: list[int], n: int) -> list[int]:
    """Product of coefficient lists, truncated to length n."""
    out = [0] * n
    for i, ai in enumerate(a[:n]):
        if ai:
            for j, bj in enumerate(b[:n - i]):
                out[i + j] += ai * bj
    return out


def _divide(num: list[int], den: list[int], n: int) -> list[int]:
    """Exact power-series quotient num/den to length n."""
    if den[0] == 0:
        raise ExactDivisionError("divisor has zero constant term")
    quot = []
    for k in range(n):
        acc = num[k] if k < len(num) else 0
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * quot[k - i]
        q, r = divmod(acc, den[0])
        if r:
            raise ExactDivisionError(f"nonzero remainder at degree {k}")
        quot.append(q)
    return quot


def sigma3(n: int) -> int:
    """Sum of cubes of the divisors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d ** 3
            if d * d != n:
                total += (n // d) ** 3
        d += 1
    return total


def euler_exact(n: int) -> list[int]:
    """prod (1 - q^i) to length n, via signed pentagonal exponents."""
    out = [0] * n
    k = 0
    while k * (3 * k - 1) // 2 < n:
        sign = -1 if k % 2 else 1
        out[k * (3 * k - 1) // 2] = sign
        if k and k * (3 * k + 1) // 2 < n:
            out[k * (3 * k + 1) // 2] = sign
        k += 1
    return out


def eisenstein_e4(n: int) -> list[int]:
    """1 + 240 sum sigma3(m) q^m to length n (Lambert series rewritten)."""
    return [1] + [240 * sigma3(m) for m in range(1, n)]


def j_exact(N: int, cap: int = DEFAULT_CAP) -> IntSeries:
    """Klein j(-1..N): E4^3 divided by q prod (1 - q^i)^24, exactly."""
    _check_cap(N, cap)
    n = N + 2
    e4 = eisenstein_e4(n)
    num = _mul(_mul(e4, e4, n), e4, n)
    eta = euler_exact(n)
    eta2 = _mul(eta, eta, n)
    eta4 = _mul(eta2, eta2, n)
    eta8 = _mul(eta4, eta4, n)
    eta24 = _mul(_mul(eta8, eta8, n), eta8, n)
    return IntSeries(-1, N + 1, tuple(_divide(num, eta24, n)))


def _parts_dp(N: int, part_copies) -> IntSeries:
    ways = [1] + [0] * N
    for part in range(1, N + 1):
        for _ in range(part_copies(part)):
            for s in range(part, N + 1):
                ways[s] += ways[s - part]
    return IntSeries(0, N, tuple(ways))


def P_b_exact(b: int, N: int, cap: int = DEFAULT_CAP) -> IntSeries:
    """Partitions into parts of b colours: 1 / prod (1 - q^i)^b."""
    if b < 1:
        raise ValueError("b must be positive")
    _check_cap(N, cap)
    return _parts_dp(N, lambda part: b)


def p_exact(N: int, cap: int = DEFAULT_CAP) -> IntSeries:
    return P_b_exact(1, N, cap)


def c_exact(N: int, cap: int = DEFAULT_CAP) -> IntSeries:
    """Cubic partitions: parts of two kinds, the second kind even only."""
    _check_cap(N, cap)
    return _parts_dp(N, lambda part: 2 if part % 2 == 0 else 1)
