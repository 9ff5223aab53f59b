"""Timing of the compiled and pure-Python carry-less kernels."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import _kernel
from .generators import cubic_series, j_mod2_series


@dataclass(frozen=True)
class BenchRow:
    kernel: str
    operation: str
    degree: int
    seconds: float


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_benchmark(N: int, repeat: int = 3, seed: int = 0,
                  cutoffs: tuple[int, ...] = (8, 16, 24, 32, 64, 128)) -> list[BenchRow]:
    """Dense product, cubic inverse and j series at degree N, per kernel.

    With the compiled kernel present, also sweeps its Karatsuba cutoff.
    """
    rng = random.Random(seed)
    a = rng.getrandbits(N + 1) | 1
    b = rng.getrandbits(N + 1) | 1
    rows = []
    for name in sorted(_kernel.KERNELS):
        dense = _kernel.KERNELS[name]
        rows.append(BenchRow(name, "dense_mul", N, _best_of(lambda: dense(a, b), repeat)))
        with _kernel.use_backend(name):
            rows.append(BenchRow(name, "cubic_series", N,
                                 _best_of(lambda: cubic_series(N), repeat)))
            rows.append(BenchRow(name, "j_mod2_series", N,
                                 _best_of(lambda: j_mod2_series(N), repeat)))
    if "compiled" in _kernel.KERNELS:
        from . import _clmul
        saved = _clmul.get_cutoff()
        try:
            for c in cutoffs:
                _clmul.set_cutoff(c)
                dense = _kernel.KERNELS["compiled"]
                rows.append(BenchRow("compiled", f"dense_mul_cutoff_{c}", N,
                                     _best_of(lambda: dense(a, b), repeat)))
        finally:
            _clmul.set_cutoff(saved)
    return rows
