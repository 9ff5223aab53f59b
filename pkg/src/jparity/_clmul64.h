/* 64x64 -> 128 carry-less multiply. Hardware path when built with -mpclmul. */
#ifndef JPARITY_CLMUL64_H
#define JPARITY_CLMUL64_H

#include <stdint.h>

#if defined(__PCLMUL__)
#include <emmintrin.h>
#include <wmmintrin.h>
#define JPARITY_HAVE_PCLMUL 1

static inline void clmul64(uint64_t a, uint64_t b, uint64_t *lo, uint64_t *hi)
{
    __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128((long long)a),
                                     _mm_cvtsi64_si128((long long)b), 0x00);
    *lo = (uint64_t)_mm_cvtsi128_si64(r);
    *hi = (uint64_t)_mm_cvtsi128_si64(_mm_srli_si128(r, 8));
}

#else
#define JPARITY_HAVE_PCLMUL 0

static inline void clmul64(uint64_t a, uint64_t b, uint64_t *lo, uint64_t *hi)
{
    uint64_t l = 0, h = 0;
    int i;
    if (a & 1) l = b;
    for (i = 1; i < 64; i++) {
        uint64_t mask = (uint64_t)0 - ((a >> i) & 1);
        l ^= (b << i) & mask;
        h ^= (b >> (64 - i)) & mask;
    }
    *lo = l;
    *hi = h;
}
#endif

#endif
