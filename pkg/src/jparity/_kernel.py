"""Carry-less multiplication backend, selected once at import.

The compiled Cython kernel is preferred; the Kronecker-substitution
fallback in :mod:`jparity._fallback` is used when it is not built.
"""

from contextlib import contextmanager

import numpy as np

from . import _fallback

try:
    from . import _clmul
except ImportError:  # pragma: no cover - depends on build
    _clmul = None

# Below this many set bits in the sparser operand, shift-and-xor wins.
SPARSE_TERMS = 48


def _words(a: int, nwords: int) -> np.ndarray:
    return np.frombuffer(a.to_bytes(nwords * 8, "little"), dtype="<u8")


def _compiled_clmul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    wa = _words(a, (a.bit_length() + 63) >> 6)
    wb = _words(b, (b.bit_length() + 63) >> 6)
    return int.from_bytes(_clmul.clmul_words(wa, wb).tobytes(), "little")


def _sparse_clmul(dense: int, sparse: int) -> int:
    out = 0
    while sparse:
        low = sparse & -sparse
        out ^= dense << (low.bit_length() - 1)
        sparse ^= low
    return out


KERNELS = {"python": _fallback.clmul}
if _clmul is not None:
    KERNELS["compiled"] = _compiled_clmul

BACKEND = "compiled" if "compiled" in KERNELS else "python"
_dense = KERNELS[BACKEND]


def clmul(a: int, b: int) -> int:
    """Carry-less product using the active backend."""
    if a.bit_count() > b.bit_count():
        a, b = b, a
    if a.bit_count() <= SPARSE_TERMS:
        return _sparse_clmul(b, a)
    return _dense(a, b)


@contextmanager
def use_backend(name: str):
    """Temporarily route dense products through the named kernel."""
    global _dense
    if name not in KERNELS:
        raise KeyError(f"kernel {name!r} unavailable; have {sorted(KERNELS)}")
    saved = _dense
    _dense = KERNELS[name]
    try:
        yield
    finally:
        _dense = saved
