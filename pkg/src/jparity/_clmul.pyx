# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Word-sliced carry-less multiplication with Karatsuba splitting."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset, memcpy

import numpy as np

cdef extern from "_clmul64.h" nogil:
    void clmul64(uint64_t a, uint64_t b, uint64_t *lo, uint64_t *hi)
    int JPARITY_HAVE_PCLMUL

HAVE_PCLMUL = bool(JPARITY_HAVE_PCLMUL)

cdef Py_ssize_t _cutoff = 16


def get_cutoff():
    return _cutoff


def set_cutoff(Py_ssize_t words):
    """Set the operand size (in 64-bit words) below which schoolbook is used."""
    global _cutoff
    if words < 1:
        raise ValueError("cutoff must be at least one word")
    _cutoff = words


cdef void _schoolbook(const uint64_t *a, Py_ssize_t na, const uint64_t *b,
                      Py_ssize_t nb, uint64_t *out) noexcept nogil:
    cdef Py_ssize_t i, j
    cdef uint64_t ai, lo, hi
    memset(out, 0, (na + nb) * sizeof(uint64_t))
    for i in range(na):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(nb):
            clmul64(ai, b[j], &lo, &hi)
            out[i + j] ^= lo
            out[i + j + 1] ^= hi


cdef void _karatsuba(const uint64_t *a, const uint64_t *b, Py_ssize_t n,
                     uint64_t *out, uint64_t *scratch,
                     Py_ssize_t cutoff) noexcept nogil:
    # out receives 2n words; scratch needs _scratch_words(n) words
    cdef Py_ssize_t h, l, i
    cdef uint64_t *sa
    cdef uint64_t *sb
    cdef uint64_t *mid
    if n <= cutoff:
        _schoolbook(a, n, b, n, out)
        return
    h = (n + 1) >> 1
    l = n - h
    _karatsuba(a, b, h, out, scratch, cutoff)
    _karatsuba(a + h, b + h, l, out + 2 * h, scratch, cutoff)
    sa = scratch
    sb = scratch + h
    mid = scratch + 2 * h
    memcpy(sa, a, h * sizeof(uint64_t))
    memcpy(sb, b, h * sizeof(uint64_t))
    for i in range(l):
        sa[i] ^= a[h + i]
        sb[i] ^= b[h + i]
    _karatsuba(sa, sb, h, mid, scratch + 4 * h, cutoff)
    for i in range(2 * h):
        mid[i] ^= out[i]
    for i in range(2 * l):
        mid[i] ^= out[2 * h + i]
    # a0*b1 + a1*b0 has fewer than h + l significant words
    for i in range(h + l):
        out[h + i] ^= mid[i]


cdef Py_ssize_t _scratch_words(Py_ssize_t n, Py_ssize_t cutoff) noexcept nogil:
    cdef Py_ssize_t total = 0, h
    while n > cutoff:
        h = (n + 1) >> 1
        total += 4 * h
        n = h
    return total + 1


def clmul_words(const uint64_t[::1] a, const uint64_t[::1] b):
    """Carry-less product of two little-endian word vectors.

    Returns a ``uint64`` array of ``len(a) + len(b)`` words.
    """
    cdef Py_ssize_t na = a.shape[0], nb = b.shape[0]
    result = np.zeros(na + nb, dtype=np.uint64)
    if na == 0 or nb == 0:
        return result
    cdef uint64_t[::1] out = result
    cdef const uint64_t *long_p
    cdef const uint64_t *short_p
    cdef Py_ssize_t nl, ns, off, chunk, i
    cdef Py_ssize_t cutoff = _cutoff
    cdef uint64_t *block
    cdef uint64_t *prod
    cdef uint64_t *scratch
    if na >= nb:
        long_p, nl, short_p, ns = &a[0], na, &b[0], nb
    else:
        long_p, nl, short_p, ns = &b[0], nb, &a[0], na

    block = <uint64_t *> malloc(ns * sizeof(uint64_t))
    prod = <uint64_t *> malloc(2 * ns * sizeof(uint64_t))
    scratch = <uint64_t *> malloc(_scratch_words(ns, cutoff) * sizeof(uint64_t))
    if block == NULL or prod == NULL or scratch == NULL:
        free(block)
        free(prod)
        free(scratch)
        raise MemoryError()
    try:
        with nogil:
            off = 0
            while off < nl:
                chunk = nl - off
                if chunk > ns:
                    chunk = ns
                memset(block, 0, ns * sizeof(uint64_t))
                memcpy(block, long_p + off, chunk * sizeof(uint64_t))
                _karatsuba(block, short_p, ns, prod, scratch, cutoff)
                for i in range(chunk + ns):
                    out[off + i] ^= prod[i]
                off += ns
    finally:
        free(block)
        free(prod)
        free(scratch)
    return result
