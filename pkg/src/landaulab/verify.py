"""Desk-scale verification of the inequality chain bounding Landau's
function by the n-th prime.

Every check is computed vectorized over the whole range; any row whose
margin falls inside a relative guard band is re-evaluated at high
precision (mpmath) before it is classified, so floating noise near a
tight margin can never produce a false verdict.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, asdict

import mpmath
import numpy as np

from . import landau as landau_mod
from .landau import LandauTable, build_landau_table
from .logintegral import LiConfig, DEFAULT_CONFIG, li_batch, li_inverse_batch
from .primes import PrimeTable, build_prime_table
from .zeros import ZeroTable, constant_c
from .parallel import pmap

DN_CONST = (2.0 - math.sqrt(2.0)) / 3.0
SCHOENFELD_8PI = math.sqrt(2.0) / (8.0 * math.pi)
SCHOENFELD_16PI = math.sqrt(2.0) / (16.0 * math.pi)
GAP_LEMMA_MIN_N = 2657

GUARD_BAND = 1e-6  # relative; margins inside the band get a high-precision recheck
RECHECK_DPS = 40


@dataclass(frozen=True)
class VerificationRow:
    n: int
    p_n: int
    li_inv: float
    log_g: float
    a_n: float  # nan marks not-applicable (n = 1)
    dn_bound: float
    thm1_margin: float  # p_n - log^2 g(n)
    gap_ok: bool
    sqrt_gap_ok: bool
    crude_ok: bool
    rosser_ok: bool

    @property
    def all_ok(self) -> bool:
        bound = self.dn_bound if not math.isnan(self.dn_bound) else -math.inf
        an_ok = math.isnan(self.a_n) or (self.a_n > 0 and self.a_n >= bound)
        return (
            self.thm1_margin > 0
            and an_ok
            and self.gap_ok
            and self.sqrt_gap_ok
            and self.crude_ok
            and self.rosser_ok
        )


@dataclass
class RangeReport:
    from_n: int
    to_n: int
    counts: dict[str, int] = field(default_factory=dict)
    rows_failed: list[VerificationRow] = field(default_factory=list)
    config: dict = field(default_factory=dict)

    @property
    def n_failures(self) -> int:
        return len(self.rows_failed)


@dataclass(frozen=True)
class VerifyDeps:
    """Immutable tables shared by all row computations."""

    primes: PrimeTable
    landau: LandauTable
    li_inv: np.ndarray  # index by n; entries < 2 are nan
    c_hi: float
    c_mid: float
    cfg: LiConfig


def sieve_limit_for(max_n: int) -> int:
    """Sieve bound guaranteed to cover p_n for all n <= max_n."""
    if max_n < 6:
        return 100
    ln = math.log(max_n)
    return int(max_n * (ln + math.log(ln)) * 1.05) + 100


def build_deps(
    max_n: int,
    zeros: ZeroTable | None = None,
    cfg: LiConfig = DEFAULT_CONFIG,
    prime_table: PrimeTable | None = None,
    landau_table: LandauTable | None = None,
    workers: int = 1,
) -> VerifyDeps:
    if prime_table is None:
        prime_table = build_prime_table(sieve_limit_for(max_n))
    if prime_table.count < max_n:
        raise ValueError(
            f"prime table holds {prime_table.count} primes, need {max_n}"
        )
    if landau_table is None:
        landau_table = build_landau_table(max_n, prime_table)
    li_inv = np.full(max_n + 1, np.nan)
    if max_n >= 2:
        ns = np.arange(2, max_n + 1, dtype=np.float64)
        chunks = np.array_split(ns, max(1, workers * 4))
        parts = pmap(lambda c: li_inverse_batch(c, cfg), chunks, workers)
        li_inv[2:] = np.concatenate(parts)
    if zeros is not None:
        cs = constant_c(zeros)
        c_hi, c_mid = cs.interval[1], cs.midpoint
    else:
        c_hi = c_mid = math.nan
    return VerifyDeps(
        primes=prime_table,
        landau=landau_table,
        li_inv=li_inv,
        c_hi=c_hi,
        c_mid=c_mid,
        cfg=cfg,
    )


# ---------------------------------------------------------------------------
# Scalar operations


def a_n(n: int, deps: VerifyDeps) -> float:
    """(sqrt(li^-1(n)) - log g(n)) / (n log n)^(1/4), n >= 2."""
    if n < 2:
        raise ValueError(f"a_n requires n >= 2, got {n}")
    return float(
        (math.sqrt(deps.li_inv[n]) - deps.landau.log_g[n])
        / (n * math.log(n)) ** 0.25
    )


def dn_lower_bound(n: int, c: float) -> float:
    """(2 - sqrt 2)/3 - c - 0.43 loglog n / log n, n >= 2."""
    if n < 2:
        raise ValueError(f"dn_lower_bound requires n >= 2, got {n}")
    return DN_CONST - c - 0.43 * math.log(math.log(n)) / math.log(n)


def check_theorem1(n: int, deps: VerifyDeps) -> tuple[bool, float]:
    """log^2 g(n) < p_n; returns (ok, margin = p_n - log^2 g(n))."""
    p = int(deps.primes.primes[n - 1])
    margin = p - float(deps.landau.log_g[n]) ** 2
    return margin > 0, margin


def gap_lemma_rhs(n) -> np.ndarray | float:
    nlogn = n * np.log(n)
    return SCHOENFELD_8PI * np.log(2 * nlogn) ** 2 * np.sqrt(nlogn)


def sqrt_gap_rhs(n) -> np.ndarray | float:
    return SCHOENFELD_16PI * np.log(2 * n * np.log(n)) ** 2


def check_gap_lemma(n: int, deps: VerifyDeps) -> bool:
    if n < GAP_LEMMA_MIN_N:
        raise ValueError(f"gap lemma applies for n >= {GAP_LEMMA_MIN_N}")
    p = int(deps.primes.primes[n - 1])
    return abs(float(deps.li_inv[n]) - p) <= float(gap_lemma_rhs(float(n)))


def check_sqrt_gap(n: int, deps: VerifyDeps) -> bool:
    if n < GAP_LEMMA_MIN_N:
        raise ValueError(f"sqrt-gap bound applies for n >= {GAP_LEMMA_MIN_N}")
    p = int(deps.primes.primes[n - 1])
    return math.sqrt(float(deps.li_inv[n])) - math.sqrt(p) < float(
        sqrt_gap_rhs(float(n))
    )


def check_crude_and_rosser(n: int, deps: VerifyDeps) -> dict[str, bool]:
    """Rosser lower bound plus the crude 2 n log n upper/lower bounds."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    p = int(deps.primes.primes[n - 1])
    nlogn = n * math.log(n) if n >= 2 else 0.0
    liv = float(deps.li_inv[n]) if n >= 2 else math.nan
    return {
        "rosser": p > nlogn,
        "crude_p": p < 2 * nlogn if n >= 3 else True,
        "crude_li": liv < 2 * nlogn if n >= 3 else True,
        "li_lower": liv > nlogn if n >= 41 else True,
    }


def li_lower_crossover(deps: VerifyDeps, scan_to: int = 100) -> int:
    """First n from which li^-1(n) > n log n holds onward (within scan range)."""
    last_fail = 1
    for n in range(2, scan_to + 1):
        if not float(deps.li_inv[n]) > n * math.log(n):
            last_fail = n
    return last_fail + 1


# ---------------------------------------------------------------------------
# Sweeps


def _recheck_li_inv(n: int) -> float:
    """High-precision li^-1(n) for guard-band reclassification."""
    with mpmath.workdps(RECHECK_DPS):
        x0 = n * (math.log(n) + math.log(math.log(n))) if n >= 3 else 4.0
        root = mpmath.findroot(lambda x: mpmath.li(x) - n, x0)
        return float(root)


def run_range(
    from_n: int, to_n: int, deps: VerifyDeps, workers: int = 1
) -> RangeReport:
    """Verify every row in [from_n, to_n]; deterministic for any worker count."""
    if from_n > to_n:
        raise ValueError(f"empty range [{from_n}, {to_n}]")
    if from_n < 1:
        raise ValueError("range must start at n >= 1")
    if to_n > deps.landau.max_n or to_n > deps.primes.count:
        raise ValueError(f"range end {to_n} beyond prepared tables")

    chunk_bounds = np.array_split(np.arange(from_n, to_n + 1), max(1, workers * 4))
    chunk_results = pmap(lambda ns: _sweep_chunk(ns, deps), chunk_bounds, workers)

    counts: dict[str, int] = {
        k: 0
        for k in (
            "rows",
            "thm1_fail",
            "an_fail",
            "gap_fail",
            "sqrt_gap_fail",
            "crude_fail",
            "rosser_fail",
        )
    }
    failed: list[VerificationRow] = []
    for rows, chunk_counts in chunk_results:
        failed.extend(rows)
        for k, v in chunk_counts.items():
            counts[k] += v
    return RangeReport(
        from_n=from_n,
        to_n=to_n,
        counts=counts,
        rows_failed=failed,
        config={
            "c_hi": deps.c_hi,
            "c_mid": deps.c_mid,
            "abs_tol": deps.cfg.abs_tol,
            "inv_tol": deps.cfg.inv_tol,
            "guard_band": GUARD_BAND,
        },
    )


def _chunk_arrays(ns: np.ndarray, deps: VerifyDeps) -> dict[str, np.ndarray]:
    n = ns.astype(np.int64)
    nf = ns.astype(np.float64)
    p = deps.primes.primes[n - 1].astype(np.float64)
    log_g = deps.landau.log_g[n]
    liv = deps.li_inv[n]

    thm1_margin = p - log_g**2
    thm1_ok = thm1_margin > 0

    with np.errstate(invalid="ignore", divide="ignore"):
        lnn = np.log(nf)
        an = np.where(
            n >= 2, (np.sqrt(liv) - log_g) / (nf * lnn) ** 0.25, np.nan
        )
        dn_b = np.where(
            n >= 2, DN_CONST - deps.c_hi - 0.43 * np.log(lnn) / lnn, np.nan
        )
        # Without a zeros table c is nan and only positivity of a_n is tested.
        dn_term = np.where(np.isnan(dn_b), -np.inf, dn_b)
        an_margin = np.where(n >= 2, np.minimum(an, an - dn_term), np.inf)
        an_ok = (n < 2) | (an_margin > 0)

        gap_margin = np.where(
            n >= GAP_LEMMA_MIN_N, gap_lemma_rhs(nf) - np.abs(liv - p), np.inf
        )
        gap_ok = gap_margin >= 0
        sqrt_gap_margin = np.where(
            n >= GAP_LEMMA_MIN_N,
            sqrt_gap_rhs(nf) - (np.sqrt(liv) - np.sqrt(p)),
            np.inf,
        )
        sqrt_gap_ok = sqrt_gap_margin > 0

        nlogn = nf * lnn
        rosser_ok = p > nlogn
        crude_ok = (
            ((n < 3) | ((p < 2 * nlogn) & (liv < 2 * nlogn)))
            & ((n < 41) | (liv > nlogn))
        )

    # Guard band: rows whose deciding margin is within 1e-6 relative of zero
    # are re-evaluated at high precision before classification.
    scale = np.maximum(1.0, p)
    with np.errstate(invalid="ignore"):
        near = (
            (np.abs(thm1_margin) < GUARD_BAND * scale)
            | (np.abs(an_margin) < GUARD_BAND)
            | (np.abs(gap_margin) < GUARD_BAND * scale)
            | (np.abs(sqrt_gap_margin) < GUARD_BAND)
        )
    for idx in np.nonzero(near)[0]:
        ni = int(n[idx])
        liv_hp = _recheck_li_inv(ni) if ni >= 2 else math.nan
        pi_ = float(p[idx])
        lg = float(log_g[idx])
        thm1_margin[idx] = pi_ - lg * lg
        thm1_ok[idx] = thm1_margin[idx] > 0
        if ni >= 2:
            an[idx] = (math.sqrt(liv_hp) - lg) / (ni * math.log(ni)) ** 0.25
            bound = dn_b[idx] if not math.isnan(dn_b[idx]) else -math.inf
            an_ok[idx] = an[idx] > 0 and an[idx] >= bound
            if ni >= GAP_LEMMA_MIN_N:
                gap_ok[idx] = abs(liv_hp - pi_) <= float(gap_lemma_rhs(float(ni)))
                sqrt_gap_ok[idx] = math.sqrt(liv_hp) - math.sqrt(pi_) < float(
                    sqrt_gap_rhs(float(ni))
                )

    return {
        "n": n,
        "p": p,
        "liv": liv,
        "log_g": log_g,
        "an": an,
        "dn_b": dn_b,
        "thm1_margin": thm1_margin,
        "thm1_ok": thm1_ok,
        "an_ok": an_ok,
        "gap_ok": gap_ok,
        "sqrt_gap_ok": sqrt_gap_ok,
        "crude_ok": crude_ok,
        "rosser_ok": rosser_ok,
    }


def _sweep_chunk(ns: np.ndarray, deps: VerifyDeps):
    if len(ns) == 0:
        return [], {}
    a = _chunk_arrays(ns, deps)
    n, p, liv, log_g, an, dn_b = (
        a["n"], a["p"], a["liv"], a["log_g"], a["an"], a["dn_b"],
    )
    thm1_margin, thm1_ok, an_ok = a["thm1_margin"], a["thm1_ok"], a["an_ok"]
    gap_ok, sqrt_gap_ok = a["gap_ok"], a["sqrt_gap_ok"]
    crude_ok, rosser_ok = a["crude_ok"], a["rosser_ok"]
    bad = ~(thm1_ok & an_ok & gap_ok & sqrt_gap_ok & crude_ok & rosser_ok)
    rows = [
        VerificationRow(
            n=int(n[i]),
            p_n=int(p[i]),
            li_inv=float(liv[i]),
            log_g=float(log_g[i]),
            a_n=float(an[i]),
            dn_bound=float(dn_b[i]),
            thm1_margin=float(thm1_margin[i]),
            gap_ok=bool(gap_ok[i]),
            sqrt_gap_ok=bool(sqrt_gap_ok[i]),
            crude_ok=bool(crude_ok[i]),
            rosser_ok=bool(rosser_ok[i]),
        )
        for i in np.nonzero(bad)[0]
    ]
    counts = {
        "rows": int(len(n)),
        "thm1_fail": int(np.count_nonzero(~thm1_ok)),
        "an_fail": int(np.count_nonzero(~an_ok)),
        "gap_fail": int(np.count_nonzero(~gap_ok)),
        "sqrt_gap_fail": int(np.count_nonzero(~sqrt_gap_ok)),
        "crude_fail": int(np.count_nonzero(~crude_ok)),
        "rosser_fail": int(np.count_nonzero(~rosser_ok)),
    }
    return rows, counts


def make_row(n: int, deps: VerifyDeps) -> VerificationRow:
    """Single VerificationRow (row-at-a-time convenience path)."""
    rows, _ = _sweep_chunk(np.array([n]), deps)
    if rows:
        return rows[0]
    # Passing rows are not materialized by the sweep; rebuild directly.
    p = int(deps.primes.primes[n - 1])
    lg = float(deps.landau.log_g[n])
    liv = float(deps.li_inv[n]) if n >= 2 else math.nan
    cb = check_crude_and_rosser(n, deps)
    return VerificationRow(
        n=n,
        p_n=p,
        li_inv=liv,
        log_g=lg,
        a_n=a_n(n, deps) if n >= 2 else math.nan,
        dn_bound=dn_lower_bound(n, deps.c_hi) if n >= 2 else math.nan,
        thm1_margin=check_theorem1(n, deps)[1],
        gap_ok=check_gap_lemma(n, deps) if n >= GAP_LEMMA_MIN_N else True,
        sqrt_gap_ok=check_sqrt_gap(n, deps) if n >= GAP_LEMMA_MIN_N else True,
        crude_ok=cb["crude_p"] and cb["crude_li"] and cb["li_lower"],
        rosser_ok=cb["rosser"],
    )


# ---------------------------------------------------------------------------
# pi(m) <= li(m) scan


def check_pi_le_li(
    m_max: int,
    table: PrimeTable,
    cfg: LiConfig = DEFAULT_CONFIG,
    chunk: int = 1_000_000,
) -> int | None:
    """First integer m in [2, m_max] with pi(m) > li(m), or None."""
    if m_max > table.limit:
        raise ValueError(f"m_max={m_max} exceeds sieve bound {table.limit}")
    for lo in range(2, m_max + 1, chunk):
        hi = min(lo + chunk - 1, m_max)
        ms = np.arange(lo, hi + 1, dtype=np.float64)
        pi_vals = np.searchsorted(table.primes, np.arange(lo, hi + 1), side="right")
        li_vals = li_batch(ms, cfg)
        margin = li_vals - pi_vals
        suspicious = np.nonzero(margin < GUARD_BAND * np.maximum(1.0, li_vals))[0]
        for idx in suspicious:
            m = int(lo + idx)
            with mpmath.workdps(RECHECK_DPS):
                if int(pi_vals[idx]) > mpmath.li(m):
                    return m
    return None


# ---------------------------------------------------------------------------
# Threshold scan (pure function evaluation, no tables needed)


def f1_threshold(n) -> np.ndarray | float:
    """0.14 - 0.43 loglog n / log n - 0.08."""
    ln = np.log(n)
    return 0.14 - 0.43 * np.log(ln) / ln - 0.08


def f2_threshold(n) -> np.ndarray | float:
    """0.08 (n log n)^(1/4) - sqrt(2)/(16 pi) log^2(2 n log n)."""
    nlogn = n * np.log(n)
    return 0.08 * nlogn**0.25 - SCHOENFELD_16PI * np.log(2 * nlogn) ** 2


@dataclass
class ThresholdScanReport:
    grid: np.ndarray
    f1: np.ndarray
    f2: np.ndarray
    f1_at_1e10: float
    f2_at_1e10: float
    f1_bracket: tuple[float, float]  # last failing grid n, first holding-onward n
    f2_bracket: tuple[float, float]


def _crossover_bracket(grid: np.ndarray, vals: np.ndarray) -> tuple[float, float]:
    failing = np.nonzero(vals <= 0)[0]
    if len(failing) == 0:
        return (float("nan"), float(grid[0]))
    last = failing[-1]
    return (float(grid[last]), float(grid[last + 1]) if last + 1 < len(grid) else math.inf)


def threshold_scan(points_per_decade: int = 20) -> ThresholdScanReport:
    grid = np.logspace(2, 18, 16 * points_per_decade + 1)
    f1 = f1_threshold(grid)
    f2 = f2_threshold(grid)
    n10 = 1e10 + 1
    return ThresholdScanReport(
        grid=grid,
        f1=f1,
        f2=f2,
        f1_at_1e10=float(f1_threshold(n10)),
        f2_at_1e10=float(f2_threshold(n10)),
        f1_bracket=_crossover_bracket(grid, f1),
        f2_bracket=_crossover_bracket(grid, f2),
    )


# ---------------------------------------------------------------------------
# Report serialization

CSV_HEADER = "n,p_n,li_inv,log_g,a_n,dn_bound,thm1_margin,gap_ok,sqrt_gap_ok,crude_ok,rosser_ok"


def fmt15(x: float) -> str:
    if isinstance(x, float) and math.isnan(x):
        return "nan"
    return f"{x:.15g}"


def row_to_csv(row: VerificationRow) -> str:
    return ",".join(
        [
            str(row.n),
            str(row.p_n),
            fmt15(row.li_inv),
            fmt15(row.log_g),
            fmt15(row.a_n),
            fmt15(row.dn_bound),
            fmt15(row.thm1_margin),
            str(int(row.gap_ok)),
            str(int(row.sqrt_gap_ok)),
            str(int(row.crude_ok)),
            str(int(row.rosser_ok)),
        ]
    )


def iter_csv_rows(from_n: int, to_n: int, deps: VerifyDeps, chunk: int = 100_000):
    """Yield one CSV line per n in [from_n, to_n], header first."""
    yield CSV_HEADER
    for lo in range(from_n, to_n + 1, chunk):
        hi = min(lo + chunk - 1, to_n)
        a = _chunk_arrays(np.arange(lo, hi + 1), deps)
        for i in range(hi - lo + 1):
            yield ",".join(
                [
                    str(int(a["n"][i])),
                    str(int(a["p"][i])),
                    fmt15(float(a["liv"][i])),
                    fmt15(float(a["log_g"][i])),
                    fmt15(float(a["an"][i])),
                    fmt15(float(a["dn_b"][i])),
                    fmt15(float(a["thm1_margin"][i])),
                    str(int(a["gap_ok"][i])),
                    str(int(a["sqrt_gap_ok"][i])),
                    str(int(a["crude_ok"][i])),
                    str(int(a["rosser_ok"][i])),
                ]
            )


def report_to_json(report: RangeReport) -> str:
    payload = {
        "from_n": report.from_n,
        "to_n": report.to_n,
        "counts": report.counts,
        "config": report.config,
        "rows_failed": [asdict(r) for r in report.rows_failed],
    }
    return json.dumps(payload, indent=2, sort_keys=True)
