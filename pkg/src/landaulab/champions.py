"""Superchampion numbers: the greedy prime-power construction whose image
lies inside the image of Landau's function.

At parameter rho, prime p carries exponent

    alpha_p(rho) = max{k >= 0 : p**k - p**(k-1) <= rho * log p},

i.e. the k-th power step of p is bought exactly when its cost increment
is worth rho * log p of benefit.  Breakpoints of rho sweep out the whole
champion sequence; at a breakpoint the larger exponent is taken (closed
condition), making rho -> N_rho right-continuous.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .chebyshev import ChebyshevTables, pi1, psi
from .landau import LandauTable
from .logintegral import Li, LiConfig, DEFAULT_CONFIG

E = math.e

MAX_LOG_N = 1e9  # resource guard for champion_sequence


class ChampionRangeError(ValueError):
    pass


@dataclass(frozen=True)
class Champion:
    rho: float
    exponents: dict[int, int]  # prime -> alpha_p >= 1
    log_N: float               # sum alpha_p * log p
    ell: int                   # sum p**alpha_p, the least n with g(n) = N
    x1: float                  # root of x/log x = rho for rho >= e, else nan

    def N(self) -> int:
        out = 1
        for p, a in self.exponents.items():
            out *= p**a
        return out


def champion_exponent(p: int, rho: float) -> int:
    """max{k >= 0 : p**k - p**(k-1) <= rho * log p}."""
    if rho <= 0:
        raise ValueError(f"rho must be positive, got {rho}")
    # Closed condition: ties at breakpoints take the larger exponent.  The
    # relative slack absorbs float rounding when rho is an exact breakpoint
    # value (q - q/p)/log p; breakpoints of distinct steps are never within
    # 1e-12 relative of each other at usable scales.
    budget = rho * math.log(p) * (1.0 + 1e-12)
    k, q = 0, 1  # q = p**k
    while q * (p - 1) <= budget:  # p**(k+1) - p**k <= budget
        q *= p
        k += 1
    return k


def x1_of_rho(rho: float, rel_tol: float = 1e-12) -> float:
    """The unique root x >= e of x/log x = rho (safeguarded Newton)."""
    if rho < E:
        raise ChampionRangeError(f"x1_of_rho requires rho >= e, got {rho}")
    if rho == E:
        return E
    lo = E
    hi = max(E * E, rho * math.log(rho + E) ** 2)
    while hi / math.log(hi) < rho:
        hi *= 2.0
    x = rho * math.log(rho * math.log(rho + E))  # asymptotic first guess
    x = min(max(x, lo), hi)
    for _ in range(200):
        f = x - rho * math.log(x)
        if f > 0:
            hi = x
        else:
            lo = x
        df = 1.0 - rho / x
        x_new = x - f / df if df > 0 else 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= rel_tol * x:
            return x_new
        x = x_new
    raise RuntimeError(f"x1_of_rho({rho}) did not converge")


def prime_entry_threshold(rho: float, rel_tol: float = 1e-12) -> float:
    """The root x > 1 of (x - 1)/log x = rho.

    A prime p enters the construction exactly when its first step cost
    p - 1 is at most rho log p, i.e. when p <= this threshold; it is the
    right place to evaluate the psi upper bound of the theta/psi sandwich
    for log N_rho (x1 itself undershoots the largest bought prime).
    """
    if rho <= 1.0:
        raise ChampionRangeError(f"prime_entry_threshold requires rho > 1, got {rho}")
    # f(x) = x - 1 - rho log x has roots at 1 and at the sought x* > rho.
    lo = max(rho, 1.0 + 1e-9)
    hi = max(4.0, 2.0 * rho * math.log(rho + E))
    while hi - 1.0 < rho * math.log(hi):
        hi *= 2.0
    x = hi
    for _ in range(200):
        f = x - 1.0 - rho * math.log(x)
        if f > 0:
            hi = x
        else:
            lo = x
        df = 1.0 - rho / x
        x_new = x - f / df if df > 0 else 0.5 * (lo + hi)
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if abs(x_new - x) <= rel_tol * x:
            return x_new
        x = x_new
    raise RuntimeError(f"prime_entry_threshold({rho}) did not converge")


def _breakpoints(rho_max: float) -> list[tuple[float, int, int]]:
    """All (rho, p, k) with rho = (p**k - p**(k-1))/log p <= rho_max."""
    out = []
    p = 2
    while (p - 1) / math.log(p) <= rho_max:
        lp = math.log(p)
        k, q = 1, p
        while (q - q // p) / lp <= rho_max:
            out.append(((q - q // p) / lp, p, k))
            q *= p
            k += 1
        p = _next_prime(p)
    out.sort()
    return out


def _next_prime(p: int) -> int:
    candidate = p + 1
    while True:
        if all(candidate % d for d in range(2, int(candidate**0.5) + 1)):
            return candidate
        candidate += 1


def champion_sequence(rho_max: float) -> list[Champion]:
    """Champions at every breakpoint rho <= rho_max, ascending."""
    if rho_max < E:
        raise ChampionRangeError(f"rho_max must be >= e, got {rho_max}")
    exponents: dict[int, int] = {}
    log_terms: dict[int, float] = {}
    ell = 0
    out = []
    for rho, p, k in _breakpoints(rho_max):
        # Buying step k of p: cost increment p**k - p**(k-1), benefit log p.
        prev = exponents.get(p, 0)
        assert k == prev + 1
        exponents[p] = k
        ell += p**k - (p ** (k - 1) if k > 1 else 0)
        log_terms[p] = k * math.log(p)
        log_N = math.fsum(log_terms.values())
        if log_N > MAX_LOG_N:
            raise ChampionRangeError(f"log N exceeds guard {MAX_LOG_N}")
        out.append(
            Champion(
                rho=rho,
                exponents=dict(exponents),
                log_N=log_N,
                ell=ell,
                x1=x1_of_rho(rho) if rho >= E else math.nan,
            )
        )
    return out


def champion_for_n(
    n: int, seq: list[Champion], lt: LandauTable
) -> Champion:
    """The champion with maximal log N <= log g(n) (ties: equality allowed)."""
    if n > lt.max_n:
        raise ChampionRangeError(f"n={n} exceeds landau table range {lt.max_n}")
    target = float(lt.log_g[n])
    best = None
    for ch in seq:
        if ch.log_N <= target + 1e-12:
            best = ch
        else:
            break
    if best is None or seq[-1].log_N < target - 1e-9:
        raise ChampionRangeError(
            f"champion sequence too short for n={n} (log g = {target})"
        )
    return best


def witness_W(
    x1: float, t: ChebyshevTables, cfg: LiConfig = DEFAULT_CONFIG
) -> float:
    """Li(x1^2) - Pi1(x1) + (x1/log x1) * (psi(x1) - x1)."""
    if not (3.0 <= x1 <= t.x_max):
        raise ChampionRangeError(f"x1={x1} outside [3, {t.x_max}]")
    lx = math.log(x1)
    return Li(x1 * x1, cfg) - pi1(x1, t) + (x1 / lx) * (psi(x1, t) - x1)
