"""Pure-Python carry-less multiplication by Kronecker substitution.

Each bit of an operand is spread into a slot wide enough that the integer
product cannot carry between slots; the low bit of every product slot is
then the GF(2) coefficient. The integer product uses gmpy2 when importable.
"""

try:
    import gmpy2
except ImportError:  # pragma: no cover - depends on environment
    gmpy2 = None


def _to_int(binary: str):
    if gmpy2 is not None:
        return gmpy2.mpz(binary, 2)
    return int(binary, 2)


def _spread(a: int, width: int):
    return _to_int(("0" * (width - 1)).join(format(a, "b")))


def clmul(a: int, b: int) -> int:
    """Carry-less product of two non-negative ints viewed as GF(2) polynomials."""
    if a == 0 or b == 0:
        return 0
    la, lb = a.bit_length(), b.bit_length()
    width = min(la, lb).bit_length() + 1
    product = _spread(a, width) * _spread(b, width)
    length = la + lb - 1
    digits = product.digits(2) if gmpy2 is not None else format(product, "b")
    digits = digits.zfill(length * width)
    low_bits = digits[len(digits) - 1::-width][:length]
    return int(low_bits[::-1], 2)
