"""Prime generation and queries: p_n, pi(x), prime-power enumeration.

A PrimeTable is built once by a segmented sieve (odd-only storage inside
each segment) and is immutable afterwards, so it can be shared freely
between threads.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

DEFAULT_SEGMENT = 1 << 20

# Guard against runaway sieve requests; ~2e8 odd flags is a few hundred MB
# of transient segment buffers plus the prime array itself.
MAX_SIEVE_LIMIT = 500_000_000


class SieveRangeError(ValueError):
    """Query outside the sieved range (the table was built too small)."""


@dataclass(frozen=True)
class PrimeTable:
    """All primes up to `limit`, ascending, with O(log) pi(x) queries."""

    limit: int
    primes: np.ndarray  # int64, ascending
    count: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "count", int(len(self.primes)))

    def __len__(self) -> int:
        return self.count


def _small_sieve(limit: int) -> np.ndarray:
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return np.nonzero(flags)[0].astype(np.int64)


def build_prime_table(limit: int, segment_size: int = DEFAULT_SEGMENT) -> PrimeTable:
    """Sieve all primes <= limit. limit >= 0."""
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit > MAX_SIEVE_LIMIT:
        raise MemoryError(
            f"sieve limit {limit} exceeds configured budget {MAX_SIEVE_LIMIT}"
        )
    if limit < segment_size:
        return PrimeTable(limit=limit, primes=_small_sieve(limit))

    root = int(limit**0.5) + 1
    base = _small_sieve(root)
    odd_base = base[base > 2]
    chunks = [base[base <= root]]
    # Each segment covers odd numbers in [lo, hi); index i <-> value lo + 2i.
    lo = root + 1 if (root + 1) % 2 == 1 else root + 2
    while lo <= limit:
        hi = min(lo + 2 * segment_size, limit + 1)
        n_odd = (hi - lo + 1) // 2
        flags = np.ones(n_odd, dtype=bool)
        for p in odd_base:
            p = int(p)
            start = max(p * p, ((lo + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= hi:
                continue
            flags[(start - lo) // 2 :: p] = False
        chunks.append(lo + 2 * np.nonzero(flags)[0].astype(np.int64))
        lo = hi if hi % 2 == 1 else hi + 1
    primes = np.concatenate(chunks)
    primes = primes[primes <= limit]
    return PrimeTable(limit=limit, primes=primes)


def nth_prime(table: PrimeTable, n: int) -> int:
    """The n-th prime p_n, 1-indexed."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > table.count:
        raise SieveRangeError(
            f"n={n} exceeds table count {table.count} (sieve bound {table.limit} too small)"
        )
    return int(table.primes[n - 1])


def prime_count(table: PrimeTable, x: float) -> int:
    """pi(x) = #{p prime : p <= x}. Ties at exact primes include the prime."""
    if x > table.limit:
        raise SieveRangeError(f"x={x} exceeds sieve bound {table.limit}")
    if x < 2:
        return 0
    return int(np.searchsorted(table.primes, int(np.floor(x)), side="right"))


def prime_powers_upto(table: PrimeTable, x: float) -> Iterator[tuple[int, int, int]]:
    """Yield (p, k, p**k) for every prime power p**k <= x, ascending in p**k.

    Merges one power stream per prime; k never exceeds log2(x).
    """
    if x > table.limit:
        raise SieveRangeError(f"x={x} exceeds sieve bound {table.limit}")
    if x < 2:
        return
    bound = int(np.floor(x))

    def stream(p: int) -> Iterator[tuple[int, int, int]]:
        q, k = p, 1
        while q <= bound:
            yield (q, p, k)
            q *= p
            k += 1

    streams = (stream(int(p)) for p in table.primes[table.primes <= bound])
    for q, p, k in heapq.merge(*streams):
        yield (p, k, q)
