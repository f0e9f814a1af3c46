"""Ingest zeta-zero ordinates and enclose c = sum over zeros of 1/|rho(rho+1)|.

Ingested ordinates are the positive imaginary parts of nontrivial zeros;
all published ordinate tables list zeros verified to lie on the critical
line, so each pair rho = 1/2 +- i*gamma contributes

    2 / (sqrt(1/4 + gamma^2) * sqrt(9/4 + gamma^2)).

The tail above the largest ingested ordinate T is bounded through the
Riemann-von Mangoldt density dN(t) ~ (1/2pi) log(t/2pi) dt:

    tail <= 2 * int_T^inf t^-2 dN(t) = (log(T/2pi) + 1) / (pi T),

inflated by a slack factor (default 1.1).  The density is not a
pointwise majorant of the count (S(t) fluctuates by O(1)), but under
the t^-2 integral those fluctuations contribute only O(1/T^2), orders
of magnitude below the 10% slack at any usable height.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO, Iterable

import numpy as np

TAIL_SLACK = 1.1

# Sanity window for the first ordinate (14.134725...).
FIRST_ZERO_WINDOW = (14.0, 14.2)


class ZeroTableError(ValueError):
    pass


@dataclass(frozen=True)
class ZeroTable:
    gammas: np.ndarray  # strictly ascending positive ordinates
    height: float       # largest ingested ordinate

    def __len__(self) -> int:
        return len(self.gammas)


@dataclass(frozen=True)
class CSum:
    partial: float
    tail_hi: float

    @property
    def interval(self) -> tuple[float, float]:
        return (self.partial, self.partial + self.tail_hi)

    @property
    def width(self) -> float:
        return self.tail_hi

    @property
    def midpoint(self) -> float:
        return self.partial + 0.5 * self.tail_hi


def load_zeros(source: IO[str] | Iterable[str]) -> ZeroTable:
    """Parse one decimal ordinate per line; blank and '#' lines allowed."""
    values = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            gamma = float(line)
        except ValueError as exc:
            raise ZeroTableError(f"line {lineno}: cannot parse ordinate {line!r}") from exc
        if gamma <= 0:
            raise ZeroTableError(f"line {lineno}: nonpositive ordinate {gamma}")
        if values and gamma <= values[-1]:
            raise ZeroTableError(
                f"line {lineno}: ordinate {gamma} not above previous {values[-1]}"
            )
        values.append(gamma)
    if not values:
        raise ZeroTableError("no zeros in input")
    if not (FIRST_ZERO_WINDOW[0] <= values[0] <= FIRST_ZERO_WINDOW[1]):
        raise ZeroTableError(
            f"first ordinate {values[0]} outside sanity window {FIRST_ZERO_WINDOW}"
        )
    gammas = np.array(values, dtype=np.float64)
    return ZeroTable(gammas=gammas, height=float(gammas[-1]))


def load_zeros_file(path: str) -> ZeroTable:
    with open(path, "r") as fh:
        return load_zeros(fh)


def pair_term(gamma: float) -> float:
    """Contribution of the conjugate pair at ordinate gamma."""
    g2 = gamma * gamma
    return 2.0 / (math.sqrt(0.25 + g2) * math.sqrt(2.25 + g2))


def tail_bound(height: float, slack: float = TAIL_SLACK) -> float:
    """Closed-form majorant for the sum over zeros above `height`."""
    if height <= 2.0 * math.pi:
        raise ZeroTableError(f"tail bound needs height > 2*pi, got {height}")
    return slack * (math.log(height / (2.0 * math.pi)) + 1.0) / (math.pi * height)


def constant_c(table: ZeroTable, slack: float = TAIL_SLACK) -> CSum:
    """Interval enclosure of c = sum over all nontrivial zeros of 1/|rho(rho+1)|."""
    if len(table) == 0:
        raise ZeroTableError("empty zero table")
    g2 = table.gammas.astype(np.longdouble) ** 2
    terms = 2.0 / (np.sqrt(0.25 + g2) * np.sqrt(2.25 + g2))
    partial = float(np.sum(terms))
    return CSum(partial=partial, tail_hi=tail_bound(table.height, slack))
