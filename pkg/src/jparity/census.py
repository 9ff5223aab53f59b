"""Odd-coefficient counts at checkpoints and the mod-2 identity suite.

Ratios against asymptotic reference shapes are reported only; the
constants behind those shapes are unknown, so nothing here asserts them.
Exact identities are asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from . import generators as gen
from . import heights, quadrep
from .f2series import (
    BitSeries,
    count_odd_up_to,
    first_discrepancy,
    mul,
    one,
    power,
    shift,
    substitute_qm,
    truncate,
)

SHAPES = ("sqrt_x", "sqrt_x_loglog_over_log", "x_loglog_over_log",
          "x_loglogK_over_log")


def reference_value(shape: str, x: float, K: int = 0) -> float:
    if x <= math.e:
        raise ValueError(f"reference shapes need x > e, got {x}")
    lg = math.log(x)
    llg = math.log(lg)
    if shape == "sqrt_x":
        return math.sqrt(x)
    if shape == "sqrt_x_loglog_over_log":
        return math.sqrt(x) * llg / lg
    if shape == "x_loglog_over_log":
        return x * llg / lg
    if shape == "x_loglogK_over_log":
        return x * llg ** K / lg
    raise ValueError(f"unknown shape {shape!r}")


@dataclass(frozen=True)
class Checkpoint:
    x: int
    f1: int
    ref: float
    ratio: float


@dataclass(frozen=True)
class CensusReport:
    series_name: str
    ref_shape: str
    checkpoints: tuple[Checkpoint, ...]
    K: int = 0

    def __post_init__(self):
        xs = [c.x for c in self.checkpoints]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise ValueError("checkpoints must be strictly increasing")
        counts = [c.f1 for c in self.checkpoints]
        if any(a > b for a, b in zip(counts, counts[1:])):
            raise ValueError(f"f1 decreased across checkpoints for {self.series_name}")


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    max_degree_verified: int
    status: str
    first_discrepancy: Optional[int] = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def geometric_checkpoints(N: int, start_exp: int = 10) -> list[int]:
    """2^10, 2^11, ... up to N; just [N] when N is below 2^10."""
    pts = []
    x = 1 << start_exp
    while x <= N:
        pts.append(x)
        x <<= 1
    return pts or [N]


def reference_shape_for(series_name: str) -> tuple[str, int]:
    family, idx = gen.parse_name(series_name)
    if family in ("p", "c", "j", "P"):
        return "sqrt_x_loglog_over_log", 0
    if family == "R":
        return "x_loglog_over_log", 0
    if family == "delta":
        _, k0 = heights.odd_part(idx)
        if k0 == 1:
            return "sqrt_x", 0
        return "x_loglogK_over_log", heights.predicted_exponent(k0)
    return "sqrt_x", 0


def _report(name: str, shape: str, K: int, counts: Sequence[tuple[int, int]]) -> CensusReport:
    rows = []
    for x, f1 in counts:
        ref = reference_value(shape, x, K)
        rows.append(Checkpoint(x, f1, ref, f1 / ref))
    return CensusReport(name, shape, tuple(rows), K)


def run_census(series_name: str, N: int, checkpoints: Optional[Sequence[int]] = None,
               series: Optional[BitSeries] = None) -> CensusReport:
    """Count odd coefficients of a catalog series at each checkpoint."""
    shape, K = reference_shape_for(series_name)
    pts = list(checkpoints) if checkpoints is not None else geometric_checkpoints(N)
    if any(x > N for x in pts):
        raise ValueError(f"checkpoints exceed the degree bound {N}")
    if series is None:
        series = gen.named_series(series_name, N)
    return _report(series_name, shape, K,
                   [(x, count_odd_up_to(series, x)) for x in pts])


def run_semiprime_census(x: int, checkpoints: Optional[Sequence[int]] = None
                         ) -> tuple[list[quadrep.SemiprimeRecord], CensusReport]:
    """Semiprime records up to x plus their counts against x log log x / log x."""
    records = quadrep.semiprime_census(x)
    pts = list(checkpoints) if checkpoints is not None else geometric_checkpoints(x)
    ns = np.array([r.n for r in records], dtype=np.int64)
    counts = [(c, int(np.searchsorted(ns, c, side="right"))) for c in pts]
    return records, _report("semiprime", "x_loglog_over_log", 0, counts)


def standard_series_names() -> list[str]:
    """Catalog covered by the default census: c, j, P_b (b <= 9), Delta^k (odd k <= 31), R."""
    names = ["c", "j"]
    names += [f"P{b}" for b in range(1, 10)]
    names += [f"delta{k}" if k > 1 else "delta" for k in range(1, 32, 2)]
    names.append("R")
    return names


# ---------------------------------------------------------------- identities

class _Catalog:
    """Series shared across identities in one suite run, built on demand."""

    def __init__(self, N: int, corrupt_delta_bit: Optional[int] = None):
        self.N = N
        self.corrupt = corrupt_delta_bit
        self._cache: dict = {}

    def get(self, key, build: Callable[[], BitSeries]) -> BitSeries:
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def delta(self) -> BitSeries:
        def build():
            # one extra degree: j starts at q^-1, so Delta * j through q^N needs it
            d = gen.odd_square_series(self.N + 1)
            if self.corrupt is not None:
                if not d.valuation <= self.corrupt <= d.top:
                    raise ValueError(f"corruption exponent {self.corrupt} outside Delta's range")
                d = BitSeries(d.valuation, d.trunc,
                              d.bits ^ (1 << (self.corrupt - d.valuation)))
            return d
        return self.get("delta", build)

    def delta_pow(self, k: int) -> BitSeries:
        return self.get(("delta", k), lambda: power(self.delta(), k))

    def cubic(self) -> BitSeries:
        return self.get("c", lambda: gen.cubic_series(self.N))

    def triangular(self) -> BitSeries:
        return self.get("tri", lambda: gen.triangular_series(self.N))

    def r_parity_closed(self) -> BitSeries:
        # Delta^3(q) * Delta(q^4) from the suite's own Delta
        def build():
            d4 = substitute_qm(self._delta_to(self.N // 4), 4)
            return mul(self.delta_pow(3), d4)
        return self.get("d3d4", build)

    def _delta_to(self, M: int) -> BitSeries:
        d = self.delta()
        return truncate(d, max(M, d.valuation)) if M < d.top else d

    def r_fast_parity(self) -> BitSeries:
        def build():
            r = quadrep.R_fast_table(self.N) & 1
            return BitSeries(0, self.N, int.from_bytes(
                np.packbits(r.astype(np.uint8), bitorder="little").tobytes(), "little"))
        return self.get("rfast", build)


def _compare(identity_id: str, lhs: BitSeries, rhs: BitSeries, N: int) -> IdentityReport:
    top = min(lhs.top, rhs.top, N)
    bad = first_discrepancy(lhs, rhs, upto=top)
    return IdentityReport(identity_id, top, "pass" if bad is None else "fail", bad)


def partition_power_instances(N: int, b_max: int = 9, K_max: int = 2) -> list[tuple[int, int, int]]:
    """(b, k, t) triples to check: the two worked cases plus find_kt output."""
    triples = {(1, 21, 6), (3, 7, 3)}
    for b in range(1, b_max + 1, 2):
        for K in range(1, K_max + 1):
            k, t = heights.find_kt(b, K)
            triples.add((b, k, t))
    return sorted(tr for tr in triples if tr[1] < N)


def partition_power_identity(cat: _Catalog, b: int, k: int, t: int) -> IdentityReport:
    """Delta^k * prod (1 - q^{8i})^b against q^k times the 2^{t+3}-spread factor."""
    N = cat.N
    step = 1 << (t + 3)
    lhs = mul(cat.delta_pow(k), gen.eta_power(b, N, step=8))
    if heights.branch_target(b, t) == 1 << t:
        tail = gen.euler_series(max(N - k, 0) // step)
        label = "partition_power_branch"
    else:
        tail = gen.triangular_series(max(N - k, 0) // step)
        label = "partition_triangular_branch"
    rhs = shift(substitute_qm(tail, step), k)
    return _compare(f"{label}[b={b},k={k},t={t}]", lhs, rhs, N)


def delta_eta8_identity(cat: _Catalog, k: int) -> IdentityReport:
    """Delta^k = q^k prod (1 - q^{8i})^{3k}."""
    N = cat.N
    rhs = shift(gen.eta_power(3 * k, max(N - k, 0), step=8), k)
    return _compare(f"delta_k_eta8_3k[k={k}]", cat.delta_pow(k), rhs, N)


def _b_vs_R(cat: _Catalog) -> IdentityReport:
    N = cat.N
    M = (N - 7) // 8
    b = gen.eta_power(21, M)
    r = quadrep.R_fast_table(N)[7:8 * M + 8:8] & 1
    r_bits = int.from_bytes(np.packbits(r.astype(np.uint8), bitorder="little").tobytes(),
                            "little")
    return _compare("b_n_equals_R_8n_plus_7", b, BitSeries(0, M, r_bits), M)


def run_identity_suite(N: int, corrupt_delta_bit: Optional[int] = None,
                       K_max: int = 2) -> list[IdentityReport]:
    """Check every mod-2 identity through degree N; reports sorted by id."""
    if N < 64:
        raise ValueError("identity suite needs N >= 64")
    cat = _Catalog(N, corrupt_delta_bit)
    delta = cat.delta
    reports: list[IdentityReport] = []
    add = reports.append

    euler = gen.euler_series(N)
    add(_compare("jacobi_eta3_triangular", gen.eta_power(3, N), cat.triangular(), N))
    add(_compare("euler_cubed_triangular", power(euler, 3), cat.triangular(), N))
    add(_compare("euler_square_frobenius", power(euler, 2), substitute_qm(euler, 2), N))
    add(_compare("delta_q_eta24", delta(), shift(gen.eta_power(24, N - 1), 1), N))
    add(_compare("delta_q_eta8_cubed", delta(),
                 shift(gen.eta_power(3, N - 1, step=8), 1), N))
    add(_compare("delta_q_triangular_q8", delta(),
                 shift(substitute_qm(gen.triangular_series((N - 1) // 8), 8), 1), N))
    add(_compare("delta3_delta_q4_R_parity", cat.r_parity_closed(),
                 cat.r_fast_parity(), N))
    add(_compare("chain21_delta3_delta_q4_q7_eta8_21", cat.r_parity_closed(),
                 shift(gen.eta_power(21, N - 7, step=8), 7), N))
    add(_b_vs_R(cat))
    add(_compare("q_eta21_delta_times_cubic", shift(gen.eta_power(21, N - 1), 1),
                 mul(delta(), cat.cubic()), N))
    add(_compare("j_shifted_cubic_q8", gen.j_mod2_series(N),
                 shift(substitute_qm(gen.cubic_series((N + 1) // 8), 8), -1), N))
    add(_compare("j_times_delta_is_one", mul(delta(), gen.j_mod2_series(N)), one(N), N))
    add(_compare("cubic_partition_cubed", cat.cubic(),
                 power(gen.partition_series(1, N), 3), N))
    add(_compare("cubic_equals_P3", cat.cubic(), gen.partition_series(3, N), N))
    add(_compare("triangular_times_cubic_is_one", mul(cat.triangular(), cat.cubic()),
                 one(N), N))
    add(_compare("euler_times_partition_is_one",
                 mul(euler, gen.partition_series(1, N)), one(N), N))
    for b in (6, 24):
        s, b0 = heights.odd_part(b)
        add(_compare(f"P_b_odd_part_reduction[b={b}]", gen.partition_series(b, N),
                     substitute_qm(gen.partition_series(b0, N >> s), 1 << s), N))

    triples = partition_power_instances(N, K_max=K_max)
    for k in sorted({3, 7} | {k for _, k, _ in triples}):
        if k < N:
            add(delta_eta8_identity(cat, k))
    for b, k, t in triples:
        add(partition_power_identity(cat, b, k, t))
    return sorted(reports, key=lambda r: r.identity_id)
