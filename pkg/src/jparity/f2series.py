"""Truncated Laurent series over GF(2), bit-packed into Python integers.

A :class:`BitSeries` stores coefficients of ``q**valuation`` through
``q**(valuation + trunc)``; bit ``i`` of ``bits`` is the coefficient of
``q**(valuation + i)``. Coefficients below the valuation are zero, and
coefficients above ``valuation + trunc`` are unknown. Every operation
returns the widest range its inputs determine and never more.

Bit order is little-endian throughout: bit 0 of the lowest byte (or word)
is the lowest exponent. The dump format relies on this.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ._kernel import clmul


class SeriesRangeError(ValueError):
    """An exponent or truncation lies outside a series' validity range."""


class NonUnitError(ArithmeticError):
    """Inversion of a series whose lowest coefficient is zero."""


class DumpFormatError(ValueError):
    """Malformed ``F2SERIES v1`` text."""


def _mask(nbits: int) -> int:
    return (1 << nbits) - 1


# byte -> its bits moved to even positions of a 16-bit word
_SPREAD2 = np.array([int(("0").join(format(v, "08b")), 2) for v in range(256)],
                    dtype="<u2")


def spread_bits(x: int, m: int) -> int:
    """Move bit ``i`` of ``x`` to bit ``m*i``."""
    if m == 1 or x == 0:
        return x
    raw = np.frombuffer(x.to_bytes((x.bit_length() + 7) // 8, "little"), dtype=np.uint8)
    if m == 2:
        return int.from_bytes(_SPREAD2[raw].tobytes(), "little")
    pos = np.flatnonzero(np.unpackbits(raw, bitorder="little")) * m
    out = np.zeros(int(pos[-1]) + 1, dtype=np.uint8)
    out[pos] = 1
    return int.from_bytes(np.packbits(out, bitorder="little").tobytes(), "little")


@dataclass(frozen=True)
class BitSeries:
    valuation: int
    trunc: int
    bits: int

    def __post_init__(self):
        if self.trunc < 0:
            raise SeriesRangeError(f"negative truncation {self.trunc}")
        if self.bits < 0 or self.bits.bit_length() > self.trunc + 1:
            raise SeriesRangeError("bits extend beyond the truncation")

    @property
    def top(self) -> int:
        """Largest exponent whose coefficient is determined."""
        return self.valuation + self.trunc

    def __add__(self, other: BitSeries) -> BitSeries:
        return add(self, other)

    def __mul__(self, other: BitSeries) -> BitSeries:
        return mul(self, other)

    def __pow__(self, k: int) -> BitSeries:
        return power(self, k)

    def __getitem__(self, n: int) -> int:
        return coeff(self, n)

    def __repr__(self):
        shown = exponents(self)[:8]
        more = ", ..." if self.bits.bit_count() > 8 else ""
        return (f"BitSeries(valuation={self.valuation}, trunc={self.trunc}, "
                f"exponents=[{', '.join(map(str, shown))}{more}])")


def from_exponents(exps: Iterable[int], valuation: int, trunc: int) -> BitSeries:
    """Series with a 1 at each listed exponent; repeated exponents cancel."""
    top = valuation + trunc
    bits = 0
    for e in exps:
        if not valuation <= e <= top:
            raise SeriesRangeError(f"exponent {e} outside [{valuation}, {top}]")
        bits ^= 1 << (e - valuation)
    return BitSeries(valuation, trunc, bits)


def zero(valuation: int, trunc: int) -> BitSeries:
    return BitSeries(valuation, trunc, 0)


def one(trunc: int) -> BitSeries:
    return BitSeries(0, trunc, 1)


def exponents(a: BitSeries) -> list[int]:
    """Exponents with odd coefficient, ascending."""
    out = []
    bits, base = a.bits, a.valuation
    while bits:
        low = bits & -bits
        out.append(base + low.bit_length() - 1)
        bits ^= low
    return out


def truncate(a: BitSeries, top: int) -> BitSeries:
    """Forget coefficients above exponent ``top``."""
    if top > a.top:
        raise SeriesRangeError(f"cannot extend truncation from {a.top} to {top}")
    if top < a.valuation:
        raise SeriesRangeError(f"top {top} below valuation {a.valuation}")
    trunc = top - a.valuation
    return BitSeries(a.valuation, trunc, a.bits & _mask(trunc + 1))


def rebase(a: BitSeries, valuation: int) -> BitSeries:
    """Same series stored from a lower ``valuation`` (zero-filled)."""
    if valuation > a.valuation:
        raise SeriesRangeError("rebase can only lower the valuation")
    d = a.valuation - valuation
    return BitSeries(valuation, a.trunc + d, a.bits << d)


def add(a: BitSeries, b: BitSeries) -> BitSeries:
    """Coefficientwise XOR, valid up to the smaller of the two tops."""
    if max(a.valuation, b.valuation) > min(a.top, b.top):
        raise SeriesRangeError("validity ranges do not overlap")
    val = min(a.valuation, b.valuation)
    trunc = min(a.top, b.top) - val
    bits = (a.bits << (a.valuation - val)) ^ (b.bits << (b.valuation - val))
    return BitSeries(val, trunc, bits & _mask(trunc + 1))


def mul(a: BitSeries, b: BitSeries) -> BitSeries:
    """Carry-less product; relative truncation is the smaller input's."""
    trunc = min(a.trunc, b.trunc)
    m = _mask(trunc + 1)
    bits = clmul(a.bits & m, b.bits & m) & m
    return BitSeries(a.valuation + b.valuation, trunc, bits)


def square(a: BitSeries) -> BitSeries:
    """Frobenius map: spread bits, one more determined bit than 2*trunc."""
    return BitSeries(2 * a.valuation, 2 * a.trunc + 1, spread_bits(a.bits, 2))


def substitute_qm(a: BitSeries, m: int) -> BitSeries:
    """Replace q by q**m."""
    if m < 1:
        raise ValueError("m must be positive")
    return BitSeries(m * a.valuation, m * (a.trunc + 1) - 1, spread_bits(a.bits, m))


def shift(a: BitSeries, s: int) -> BitSeries:
    """Multiply by q**s."""
    return BitSeries(a.valuation + s, a.trunc, a.bits)


def inverse(a: BitSeries, out_trunc: int) -> BitSeries:
    """Multiplicative inverse to relative degree ``out_trunc``.

    Newton doubling in characteristic 2: ``g <- a * g**2`` modulo the
    doubled precision, starting from ``g = 1``.
    """
    if out_trunc < 0:
        raise SeriesRangeError("negative output truncation")
    if not a.bits & 1:
        raise NonUnitError("lowest coefficient is zero")
    if a.trunc < out_trunc:
        raise SeriesRangeError(
            f"input determined to relative degree {a.trunc}, need {out_trunc}")
    target = out_trunc + 1
    g, prec = 1, 1
    while prec < target:
        prec = min(2 * prec, target)
        m = _mask(prec)
        g = clmul(a.bits & m, spread_bits(g, 2) & m) & m
    return BitSeries(-a.valuation, out_trunc, g)


def power(a: BitSeries, k: int) -> BitSeries:
    """``a**k`` by binary exponentiation, squaring via the Frobenius map."""
    if k < 1:
        raise ValueError("exponent must be positive")
    result: Optional[BitSeries] = None
    base = a
    while True:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if not k:
            return result
        base = square(base)


def coeff(a: BitSeries, n: int) -> int:
    if not a.valuation <= n <= a.top:
        raise SeriesRangeError(f"exponent {n} outside [{a.valuation}, {a.top}]")
    return (a.bits >> (n - a.valuation)) & 1


def count_odd_up_to(a: BitSeries, x: int) -> int:
    """Number of exponents ``n <= x`` with odd coefficient."""
    if x > a.top:
        raise SeriesRangeError(f"x={x} beyond determined range (top {a.top})")
    if x < a.valuation:
        return 0
    return (a.bits & _mask(x - a.valuation + 1)).bit_count()


def first_discrepancy(a: BitSeries, b: BitSeries,
                      upto: Optional[int] = None) -> Optional[int]:
    """Lowest exponent where ``a`` and ``b`` differ, or None.

    Compared on every exponent both determine, capped at ``upto``.
    """
    top = min(a.top, b.top)
    if upto is not None:
        top = min(top, upto)
    val = min(a.valuation, b.valuation)
    if top < val:
        raise SeriesRangeError("nothing to compare")
    diff = (a.bits << (a.valuation - val)) ^ (b.bits << (b.valuation - val))
    diff &= _mask(top - val + 1)
    if not diff:
        return None
    return val + (diff & -diff).bit_length() - 1


def agree(a: BitSeries, b: BitSeries, upto: Optional[int] = None) -> bool:
    return first_discrepancy(a, b, upto) is None


def dumps(a: BitSeries) -> str:
    """``F2SERIES v1`` text: header line, then little-endian hex bits."""
    nbytes = (a.trunc + 1 + 7) // 8
    body = a.bits.to_bytes(nbytes, "little").hex()
    return f"F2SERIES v1 valuation={a.valuation} trunc={a.trunc}\n{body}\n"


def loads(text: str) -> BitSeries:
    lines = text.split("\n")
    if len(lines) != 3 or lines[2] != "":
        raise DumpFormatError("expected a header line and a hex line, newline-terminated")
    fields = lines[0].split(" ")
    if (len(fields) != 4 or fields[:2] != ["F2SERIES", "v1"]
            or not fields[2].startswith("valuation=")
            or not fields[3].startswith("trunc=")):
        raise DumpFormatError(f"bad header {lines[0]!r}")
    try:
        valuation = int(fields[2][len("valuation="):])
        trunc = int(fields[3][len("trunc="):])
        raw = bytes.fromhex(lines[1])
    except ValueError as exc:
        raise DumpFormatError(str(exc)) from None
    if lines[1] != raw.hex() or len(raw) != (trunc + 1 + 7) // 8:
        raise DumpFormatError("hex body has the wrong length or case")
    bits = int.from_bytes(raw, "little")
    if bits.bit_length() > trunc + 1:
        raise DumpFormatError("padding bits set beyond the truncation")
    return BitSeries(valuation, trunc, bits)
