"""Representation counts for N = p1 + p2 + p3**k with optional
Piatetski-Shapiro constraints per slot, and the main-term comparison.

Counts are over ORDERED triples, matching the exponential-sum product
convention: the unconstrained count equals the full-interval circle
integral of S1^2 * S3 against e(-N alpha), and the weighted constrained
count equals the integral of T11 * T12 * T3.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError
from .psprimes import Gamma, PrimeSieve, kth_root_floor, ps_member_mask
from .singular import singular_series_hua


@dataclass(frozen=True)
class RepQuery:
    """N = p1 + p2 + p3**k with per-slot optional set constraints."""

    N: int
    k: int
    gammas: tuple[Gamma | None, Gamma | None, Gamma | None] = (None, None, None)
    weighted: bool = False

    def __post_init__(self):
        if self.k not in (1, 2, 3):
            raise ValueError("k must be 1, 2, or 3")
        if self.N < 0:
            raise ValueError("N must be nonnegative")


def _slot_primes(sieve: PrimeSieve, bound: int, gamma: Gamma | None) -> np.ndarray:
    ps = sieve.primes_up_to(bound)
    if gamma is None or gamma.is_one:
        return ps
    return ps[ps_member_mask(sieve, gamma)[: len(ps)]]


def _slot_weights(primes: np.ndarray, gamma: Gamma | None) -> np.ndarray:
    if gamma is None:
        return np.ones(len(primes))
    g = float(gamma)
    return np.power(primes.astype(np.float64), 1.0 - g) / g


def count_hua(query: RepQuery, sieve: PrimeSieve):
    """Ordered-triple count (or weighted sum) of N = p1 + p2 + p3**k.

    The slot-1 list is convolved against the slot-2 indicator at the single
    index N - p3**k for each admissible p3 (direct integer convolution).
    Returns an int when unweighted, a float when weighted.
    """
    N, k = query.N, query.k
    if N > sieve.limit:
        raise CapacityError(f"N={N} exceeds sieve limit {sieve.limit}")
    g1, g2, g3 = query.gammas
    primes3 = _slot_primes(sieve, min(kth_root_floor(N, k), N), g3)
    primes1 = _slot_primes(sieve, N, g1)
    primes2 = _slot_primes(sieve, N, g2)

    # indicator (or weight) of slot 2 indexed by value
    ind2 = np.zeros(N + 1) if query.weighted else np.zeros(N + 1, dtype=np.int64)
    if len(primes2):
        ind2[primes2] = _slot_weights(primes2, g2) if query.weighted else 1

    w1 = _slot_weights(primes1, g1) if query.weighted else None
    w3 = _slot_weights(primes3, g3) if query.weighted else None

    total_int = 0
    total_f = 0.0
    for i, p3 in enumerate(primes3.tolist()):
        m = N - p3**k
        if m < 4:
            continue
        hi = np.searchsorted(primes1, m - 2, side="right")
        sub = primes1[:hi]
        vals = ind2[m - sub]
        if query.weighted:
            total_f += float(np.dot(w1[:hi], vals)) * float(w3[i])
        else:
            total_int += int(vals.sum())
    return total_f if query.weighted else total_int


def count_all_ps(
    N: int, k: int, g1: Gamma, g2: Gamma, g3: Gamma, sieve: PrimeSieve
) -> int:
    """count_hua with all three slots constrained to their sets."""
    return count_hua(RepQuery(N, k, (g1, g2, g3)), sieve)


def pair_counts(N: int, sieve: PrimeSieve, g1: Gamma | None = None, g2: Gamma | None = None) -> np.ndarray:
    """counts[m] = #{(p1, p2): p1 + p2 = m} for m <= N, batch form."""
    if N > sieve.limit:
        raise CapacityError(f"N={N} exceeds sieve limit {sieve.limit}")
    primes1 = _slot_primes(sieve, N, g1)
    primes2 = _slot_primes(sieve, N, g2)
    ind2 = np.zeros(N + 1, dtype=np.int64)
    ind2[primes2] = 1
    out = np.zeros(N + 1, dtype=np.int64)
    for p in primes1.tolist():
        out[p + 2 :] += ind2[2 : N + 1 - p]
    return out


@dataclass(frozen=True)
class AsymptoticRow:
    """Exact count against (k^2/(k+1)) * S(N,k) * N^(1+1/k) / log^3 N."""

    N: int
    k: int
    exact_count: int
    main_term: float
    ratio: float
    series_cutoff: int


def main_term(N: int, k: int, cutoff: int, sieve: PrimeSieve) -> AsymptoticRow:
    """Main-term row; the singular series is truncated at `cutoff`.

    Even N with k = 1 degenerates (the p=2 local factor vanishes) and
    raises SeriesVanishesError.
    """
    if N < 3:
        raise ValueError("main_term needs N >= 3")
    series = singular_series_hua(N, k, cutoff).value
    coefficient = k * k / (k + 1)
    main = coefficient * series * N ** (1.0 + 1.0 / k) / math.log(N) ** 3
    exact = count_hua(RepQuery(N, k), sieve)
    return AsymptoticRow(N, k, exact, main, exact / main, cutoff)
