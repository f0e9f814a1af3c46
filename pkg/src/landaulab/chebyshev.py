"""Chebyshev theta/psi, the weighted prime-power sum Pi1, and the
prime-number-theorem error envelope R(x) = sup_{s<=x} |pi(s) - Li(s)|.

All step functions are stored as sorted breakpoint arrays with cumulative
values; evaluation is a binary search.  Jump semantics: a query at an
exact breakpoint includes that breakpoint's term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .logintegral import Li, LiConfig, DEFAULT_CONFIG, Li_batch
from .primes import PrimeTable, SieveRangeError, prime_count


@dataclass(frozen=True)
class ChebyshevTables:
    x_max: int
    primes: np.ndarray        # primes <= x_max
    theta_cum: np.ndarray     # longdouble cumsum of log p over primes
    pp_breaks: np.ndarray     # sorted prime powers p**k <= x_max
    psi_cum: np.ndarray       # longdouble cumsum of log p over prime powers
    pi1_cum: np.ndarray       # longdouble cumsum of p**k / k


def _prime_power_arrays(table: PrimeTable, x_max: int):
    """(q, log p, p**k/k) for every prime power q = p**k <= x_max, sorted by q."""
    primes = table.primes[table.primes <= x_max]
    qs = [primes.astype(np.float64)]
    logs = [np.log(primes.astype(np.float64))]
    weights = [primes.astype(np.float64)]
    k = 2
    while 2**k <= x_max:
        ps = primes[primes <= int(round(x_max ** (1.0 / k))) + 2]
        ps = ps[ps**k <= x_max]  # exact integer re-check
        if len(ps):
            qs.append((ps**k).astype(np.float64))
            logs.append(np.log(ps.astype(np.float64)))
            weights.append((ps**k).astype(np.float64) / k)
        k += 1
    q = np.concatenate(qs)
    order = np.argsort(q, kind="stable")
    return primes, q[order], np.concatenate(logs)[order], np.concatenate(weights)[order]


def build_chebyshev_tables(table: PrimeTable, x_max: int) -> ChebyshevTables:
    if x_max > table.limit:
        raise SieveRangeError(f"x_max={x_max} exceeds sieve bound {table.limit}")
    primes, q, logp, w = _prime_power_arrays(table, x_max)
    return ChebyshevTables(
        x_max=x_max,
        primes=primes,
        theta_cum=np.cumsum(np.log(primes.astype(np.longdouble))),
        pp_breaks=q,
        psi_cum=np.cumsum(logp.astype(np.longdouble)),
        pi1_cum=np.cumsum(w.astype(np.longdouble)),
    )


def _step_eval(breaks: np.ndarray, cum: np.ndarray, x: float) -> float:
    i = int(np.searchsorted(breaks, x, side="right"))
    return float(cum[i - 1]) if i > 0 else 0.0


def theta(x: float, t: ChebyshevTables) -> float:
    """Sum of log p over primes p <= x."""
    if x > t.x_max:
        raise SieveRangeError(f"x={x} exceeds table range {t.x_max}")
    return _step_eval(t.primes.astype(np.float64), t.theta_cum, x)


def psi(x: float, t: ChebyshevTables) -> float:
    """Sum of log p over prime powers p**k <= x."""
    if x > t.x_max:
        raise SieveRangeError(f"x={x} exceeds table range {t.x_max}")
    return _step_eval(t.pp_breaks, t.psi_cum, x)


def pi1(x: float, t: ChebyshevTables) -> float:
    """Sum of p**k / k over prime powers p**k <= x."""
    if x > t.x_max:
        raise SieveRangeError(f"x={x} exceeds table range {t.x_max}")
    return _step_eval(t.pp_breaks, t.pi1_cum, x)


# ---------------------------------------------------------------------------
# Error envelope R


@dataclass(frozen=True)
class REnvelope:
    """Running supremum of |pi(s) - Li(s)|.

    The supremum over real s <= x is attained either at a prime jump
    (evaluated from both sides) or at the right endpoint s = x, so the
    envelope stores the running max over primes and the query adds the
    endpoint term.
    """

    x_max: int
    breaks: np.ndarray   # primes <= x_max
    run_sup: np.ndarray  # running sup over s <= p, including both sides of p
    table: PrimeTable
    cfg: LiConfig


def build_R_envelope(
    table: PrimeTable, x_max: int, cfg: LiConfig = DEFAULT_CONFIG
) -> REnvelope:
    if x_max > table.limit:
        raise SieveRangeError(f"x_max={x_max} exceeds sieve bound {table.limit}")
    primes = table.primes[table.primes <= x_max].astype(np.float64)
    li_p = Li_batch(primes, cfg)
    pi_p = np.arange(1, len(primes) + 1, dtype=np.float64)
    # s -> p-: pi = pi(p) - 1, Li = Li(p); s = p: pi = pi(p).
    local = np.maximum(np.abs(pi_p - 1.0 - li_p), np.abs(pi_p - li_p))
    return REnvelope(
        x_max=x_max,
        breaks=primes,
        run_sup=np.maximum.accumulate(local),
        table=table,
        cfg=cfg,
    )


def R_value(env: REnvelope, x: float) -> float:
    """R(x) = sup_{s<=x} |pi(s) - Li(s)|, 2 <= x <= x_max."""
    if not (2.0 <= x <= env.x_max):
        raise SieveRangeError(f"x={x} outside [2, {env.x_max}]")
    i = int(np.searchsorted(env.breaks, x, side="right"))
    sup_primes = float(env.run_sup[i - 1]) if i > 0 else 0.0
    endpoint = abs(prime_count(env.table, x) - Li(x, env.cfg))
    return max(sup_primes, endpoint)


def fit_log_slope(xs: np.ndarray, rs: np.ndarray) -> float:
    """Least-squares slope of log r against log x."""
    xs = np.asarray(xs, dtype=np.float64)
    rs = np.asarray(rs, dtype=np.float64)
    if np.any(rs <= 0) or np.any(xs <= 0):
        raise ValueError("log-log fit requires positive samples")
    return float(np.polyfit(np.log(xs), np.log(rs), 1)[0])


def empirical_R_exponent(
    env: REnvelope | Callable[[float], float],
    x_min: float = 1e3,
    x_max: float | None = None,
    n_samples: int = 64,
) -> float:
    """Empirical growth slope of log R vs log x on log-spaced samples.

    Requires at least two decades of range.
    """
    if isinstance(env, REnvelope):
        x_max = env.x_max if x_max is None else x_max
        fn = lambda x: R_value(env, x)
    else:
        if x_max is None:
            raise ValueError("x_max required for callable input")
        fn = env
    if x_max / x_min < 100.0:
        raise ValueError(
            f"need at least two decades of range, got [{x_min}, {x_max}]"
        )
    xs = np.exp(np.linspace(math.log(x_min), math.log(x_max), n_samples))
    xs[-1] = x_max  # exp/log round trip can overshoot the domain edge
    rs = np.array([fn(float(x)) for x in xs])
    return fit_log_slope(xs, rs)
