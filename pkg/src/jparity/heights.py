"""Binary-expansion heights of k and the (k, t) search for partition powers.

For k = sum beta_i 2^i, n3 collects the odd-indexed bits and n5 the
even-indexed bits from position 2 on, each reweighted by 2^i:

    n3(k) = sum beta_{2i+1} 2^i,   n5(k) = sum beta_{2i+2} 2^i.

The height is h = n3 + n5, alpha = h - 1, and for odd k >= 3 the order of
nilpotency of Delta^k is h + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

# find_kt gives up past this many doublings; unreachable for sane inputs
MAX_T = 4096


@dataclass(frozen=True)
class HeightProfile:
    k: int
    bits: tuple[int, ...]
    n3: int
    n5: int
    h: int
    alpha: int
    g: Optional[int]


def _spaced_bits(k: int) -> int:
    # bits 0, 2, 4, ... of k packed into consecutive positions
    out, i = 0, 0
    while k:
        out |= (k & 1) << i
        k >>= 2
        i += 1
    return out


def n3(k: int) -> int:
    return _spaced_bits(k >> 1)


def n5(k: int) -> int:
    return _spaced_bits(k >> 2)


def alpha(k: int) -> int:
    return n3(k) + n5(k) - 1


def profile(k: int) -> HeightProfile:
    if k < 1:
        raise ValueError("k must be positive")
    bits = tuple((k >> i) & 1 for i in range(k.bit_length()))
    a, b = n3(k), n5(k)
    g = a + b + 1 if k % 2 and k >= 3 else None
    return HeightProfile(k, bits, a, b, a + b, a + b - 1, g)


def predicted_exponent(k: int) -> int:
    """Power of log log x in the odd-coefficient count of Delta^k."""
    if k < 3 or k % 2 == 0:
        raise ValueError(f"k must be odd and at least 3, got {k}")
    return alpha(k)


def odd_part(b: int) -> tuple[int, int]:
    """Return (s, b0) with b = 2^s * b0 and b0 odd."""
    if b < 1:
        raise ValueError("b must be positive")
    s = (b & -b).bit_length() - 1
    return s, b >> s


class SearchExhausted(RuntimeError):
    pass


def find_kt(b: int, K: int) -> tuple[int, int]:
    """Smallest t (and its k) with alpha(k) >= K on the branch fixed by b mod 3.

    b = +-1 (mod 3): 3k = 2^t - b.   b = 0 (mod 3): 3k = 3 * 2^t - b.
    """
    if b < 1 or b % 2 == 0:
        raise ValueError(f"b must be odd and positive, got {b}")
    if K < 1:
        raise ValueError("K must be positive")
    for t in range(MAX_T):
        if b % 3 == 0:
            k = (1 << t) - b // 3
        else:
            if ((1 << t) - b) % 3:
                continue
            k = ((1 << t) - b) // 3
        if k >= 1 and alpha(k) >= K:
            _check_kt(b, K, k, t)
            return k, t
    raise SearchExhausted(f"no (k, t) for b={b}, K={K} with t < {MAX_T}")


def branch_target(b: int, t: int) -> int:
    """2^t or 3 * 2^t, whichever 3k + b must equal for this b."""
    return 3 << t if b % 3 == 0 else 1 << t


def _check_kt(b: int, K: int, k: int, t: int):
    if 3 * k + b != branch_target(b, t):
        raise AssertionError(f"3k + b != target for b={b}, k={k}, t={t}")
    if alpha(k) < K:
        raise AssertionError(f"alpha({k}) < {K}")
    if b % 3 == 1 and t % 2:
        raise AssertionError(f"b = 1 mod 3 needs even t, got {t}")
    if b % 3 == 2 and t % 2 == 0:
        raise AssertionError(f"b = -1 mod 3 needs odd t, got {t}")
