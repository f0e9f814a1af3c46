"""Landau's function g(n): max order of a permutation of n elements.

Two independent routes:

* `landau_bruteforce` enumerates every partition of n (parts >= 2, the
  rest padded with fixed points) and takes the max lcm.  Oracle scale
  only (n <= 45).
* `build_landau_table` runs the exact dynamic program over prime powers:
  each prime contributes at most one power p**e at cost p**e and benefit
  e*log p, and unused budget is allowed.  Values live in the log domain;
  witnesses are reconstructed from retained choices and multiplied back
  out as exact integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .primes import PrimeTable, SieveRangeError

BRUTEFORCE_MAX = 45

# Near-tie window for two DP candidates in the log domain; builds count
# these so the hazard is observable (see LandauTable.tie_count).
TIE_EPS = 1e-9

DEFAULT_CHOICE_LIMIT = 200_000


def prime_bound(max_n: int) -> int:
    """Largest prime that can appear in an optimal witness at this scale."""
    if max_n < 2:
        return 11
    return max(11, math.ceil(2.0 * math.sqrt(max_n * math.log(max_n))))


@dataclass(frozen=True)
class Factorization:
    """Witness multiset of prime powers: distinct bases, ascending."""

    parts: tuple[tuple[int, int], ...]  # (prime, exponent >= 1)

    @property
    def cost(self) -> int:
        return sum(p**e for p, e in self.parts)

    @property
    def value(self) -> float:
        return math.fsum(e * math.log(p) for p, e in self.parts)

    def product(self) -> int:
        out = 1
        for p, e in self.parts:
            out *= p**e
        return out


@dataclass(frozen=True)
class LandauTable:
    max_n: int
    log_g: np.ndarray  # float64, index 0..max_n, log_g[0] = log_g[1] = 0
    primes: np.ndarray  # DP primes, ascending
    choices: tuple[np.ndarray, ...] | None  # per prime: chosen exponent per budget
    tie_count: int


def build_landau_table(
    max_n: int,
    table: PrimeTable,
    retain_choice: bool | None = None,
    choice_limit: int = DEFAULT_CHOICE_LIMIT,
) -> LandauTable:
    """Exact DP for log g(n), n = 0..max_n.

    retain_choice defaults to max_n <= choice_limit; without retained
    choices, witnesses are reconstructed on demand by a restricted rebuild.
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")
    bound = prime_bound(max_n)
    if table.limit < min(bound, max(max_n, 2)):
        raise SieveRangeError(
            f"prime table limit {table.limit} below required bound {bound}"
        )
    if retain_choice is None:
        retain_choice = max_n <= choice_limit
    primes = table.primes[table.primes <= min(bound, max(max_n, 2))]

    log_g = np.zeros(max_n + 1, dtype=np.float64)
    choices: list[np.ndarray] = []
    tie_count = 0
    for p in primes.tolist():
        prev = log_g.copy()
        lnp = math.log(p)
        choice_p = np.zeros(max_n + 1, dtype=np.uint8) if retain_choice else None
        q, e = p, 1
        while q <= max_n:
            cand = prev[: max_n + 1 - q] + e * lnp
            cur = log_g[q:]
            better = cand > cur
            tie_count += int(np.count_nonzero(np.abs(cand - cur) < TIE_EPS))
            cur[better] = cand[better]
            if choice_p is not None:
                choice_p[q:][better] = e
            q *= p
            e += 1
        if choice_p is not None:
            choices.append(choice_p)
    # Unused budget is allowed, so g is non-decreasing; the DP recurrence
    # already guarantees this (prev carries over), assert cheaply.
    assert np.all(np.diff(log_g) >= 0)
    return LandauTable(
        max_n=max_n,
        log_g=log_g,
        primes=primes,
        choices=tuple(choices) if retain_choice else None,
        tie_count=tie_count,
    )


def factorization(n: int, table: LandauTable) -> Factorization:
    """Backtrack the witness multiset achieving g(n)."""
    if not (0 <= n <= table.max_n):
        raise ValueError(f"n={n} outside table range [0, {table.max_n}]")
    if table.choices is None:
        # Rebuild restricted to budget n with choices retained.
        sub = _restricted_table(n, table)
        return factorization(n, sub)
    parts = []
    m = n
    for i in range(len(table.primes) - 1, -1, -1):
        e = int(table.choices[i][m])
        if e > 0:
            p = int(table.primes[i])
            parts.append((p, e))
            m -= p**e
    return Factorization(parts=tuple(sorted(parts)))


def _restricted_table(n: int, table: LandauTable) -> LandauTable:
    from .primes import build_prime_table

    sub_primes = build_prime_table(max(int(table.primes[-1]), 2))
    return build_landau_table(max(n, 1), sub_primes, retain_choice=True,
                              choice_limit=max(n, 1))


def landau_exact(n: int, table: LandauTable) -> int:
    """g(n) as an exact integer via the backtracked witness."""
    if n <= 1:
        if n < 0:
            raise ValueError(f"n must be >= 0, got {n}")
        return 1
    return factorization(n, table).product()


@lru_cache(maxsize=1)
def _bruteforce_all() -> list[int]:
    """best[m] = max lcm over all multisets of parts >= 2 summing to <= m."""
    best = [1] * (BRUTEFORCE_MAX + 1)

    def dfs(start_sum: int, max_part: int, cur_lcm: int) -> None:
        for part in range(min(max_part, BRUTEFORCE_MAX - start_sum), 1, -1):
            s = start_sum + part
            new_lcm = math.lcm(cur_lcm, part)
            if new_lcm > best[s]:
                best[s] = new_lcm
            dfs(s, part, new_lcm)

    dfs(0, BRUTEFORCE_MAX, 1)
    # Padding with fixed points makes g non-decreasing.
    for m in range(1, BRUTEFORCE_MAX + 1):
        best[m] = max(best[m], best[m - 1])
    return best


def landau_bruteforce(n: int) -> int:
    """g(n) by exhaustive partition enumeration, 1 <= n <= 45."""
    if not (1 <= n <= BRUTEFORCE_MAX):
        raise ValueError(f"brute-force oracle supports 1 <= n <= {BRUTEFORCE_MAX}")
    return _bruteforce_all()[n]
