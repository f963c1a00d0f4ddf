"""Complete exponential sums C_q, their twisted averages B_q, and the
singular series vetted through truncated Euler products.

Definitions (k >= 1, q >= 1):

    C_q(a,k) = sum over l in [1,q], gcd(l,q)=1, of e(a l**k / q)
    B_q(N,k) = sum over a in [1,q], gcd(a,q)=1, of C_q(a,k) e(-a N / q)

B_q is real (conjugate pairing a <-> q-a); the computed imaginary part is
asserted tiny and dropped, which doubles as a corruption detector.  Phases
always come from exact residues mod q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import SeriesVanishesError

# direct double-sum cap; beyond this B_q switches to multiplicativity
B_Q_DIRECT_LIMIT = 10**4


@lru_cache(maxsize=None)
def _primes_up_to(n: int) -> tuple[int, ...]:
    if n < 2:
        return ()
    table = np.ones(n + 1, dtype=bool)
    table[:2] = False
    for p in range(2, math.isqrt(n) + 1):
        if table[p]:
            table[p * p :: p] = False
    return tuple(int(p) for p in np.flatnonzero(table))


@lru_cache(maxsize=None)
def _power_residue_counts(k: int, q: int) -> np.ndarray:
    """counts[r] = #{l in [1,q] : gcd(l,q)=1, l**k = r mod q}."""
    l = np.arange(1, q + 1, dtype=np.int64)
    l = l[np.gcd(l, q) == 1]
    if k <= 3 and q <= 2_000_000:
        r = l % q
        for _ in range(k - 1):
            r = (r * l) % q
    else:
        r = np.array([pow(int(x), k, q) for x in l], dtype=np.int64)
    counts = np.bincount(r % q, minlength=q).astype(np.float64)
    counts.setflags(write=False)
    return counts


def c_q_table(k: int, q: int) -> np.ndarray:
    """C_q(a,k) for every residue a = 0..q-1 (meaningful at gcd(a,q)=1)."""
    counts = _power_residue_counts(k, q)
    # sum_r counts[r] e(a r / q) for all a at once
    return np.fft.ifft(counts) * q


@dataclass(frozen=True)
class CompleteSum:
    """Tagged value of one complete sum, for report rows."""

    q: int
    value: complex
    kind: str  # "C_q" or "B_q"

    @classmethod
    def of_c_q(cls, a: int, k: int, q: int) -> "CompleteSum":
        return cls(q, c_q(a, k, q), "C_q")

    @classmethod
    def of_b_q(cls, N: int, k: int, q: int) -> "CompleteSum":
        return cls(q, complex(b_q(N, k, q)), "B_q")


def c_q(a: int, k: int, q: int) -> complex:
    """The complete sum C_q(a,k) from exact residues a*l**k mod q."""
    if q < 1 or k < 1:
        raise ValueError("need q >= 1 and k >= 1")
    if math.gcd(a, q) != 1:
        raise ValueError(f"gcd({a},{q}) != 1")
    residues = [(a * pow(l, k, q)) % q for l in range(1, q + 1) if math.gcd(l, q) == 1]
    z = np.exp((2j * np.pi / q) * np.array(residues, dtype=np.float64))
    return complex(math.fsum(z.real.tolist()), math.fsum(z.imag.tolist()))


def _b_q_direct(N: int, k: int, q: int) -> float:
    table = c_q_table(k, q)
    a = np.arange(q)
    coprime = np.gcd(a, q) == 1
    a = a[coprime]
    twist = np.exp((-2j * np.pi * (N % q) / q) * a)
    vals = table[a] * twist
    re = math.fsum(vals.real.tolist())
    im = math.fsum(vals.imag.tolist())
    phi = len(a)
    tol = max(1e-10, 1e-15 * phi * phi)
    if abs(im) > tol:
        raise ArithmeticError(f"B_q imaginary part {im} exceeds {tol} at q={q}")
    return re


def b_q(N: int, k: int, q: int) -> float:
    """B_q(N,k): direct double sum for q <= 1e4, multiplicative beyond."""
    if q < 1 or k < 1:
        raise ValueError("need q >= 1 and k >= 1")
    if q <= B_Q_DIRECT_LIMIT:
        return _b_q_direct(N, k, q)
    value = 1.0
    rest = q
    for p in _primes_up_to(math.isqrt(q)) + (q,):
        if rest == 1:
            break
        if rest % p:
            continue
        pe = 1
        while rest % p == 0:
            rest //= p
            pe *= p
        if pe > B_Q_DIRECT_LIMIT:
            raise ValueError(f"prime power {pe} of q={q} exceeds direct limit")
        value *= _b_q_direct(N, k, pe)
    return value


@dataclass(frozen=True)
class EulerProductEstimate:
    """Truncated Euler product for the k-th power singular series."""

    N: int
    k: int
    cutoff: int
    value: float
    last_factor_delta: float


def singular_series_hua(N: int, k: int, cutoff: int) -> EulerProductEstimate:
    """prod over p <= cutoff of (1 + B_p(N,k)/(p-1)**3).

    last_factor_delta records how much the final prime moved the product,
    the desk-scale convergence proxy.  A nonpositive local factor raises
    SeriesVanishesError (the p=2 factor vanishes for N of the wrong parity).
    """
    if cutoff < 2:
        raise ValueError("cutoff must be >= 2")
    value = 1.0
    delta = 0.0
    for p in _primes_up_to(cutoff):
        factor = 1.0 + b_q(N, k, p) / (p - 1) ** 3
        if factor <= 0.0:
            raise SeriesVanishesError(p, factor)
        prev = value
        value *= factor
        delta = abs(value - prev)
    return EulerProductEstimate(N, k, cutoff, value, delta)


def singular_series_vinogradov(N: int, cutoff: int) -> float:
    """prod_{p|N} (1 - 1/(p-1)**2) * prod_{p not | N} (1 + 1/(p-1)**3),
    both over p <= cutoff.  Even N makes the p=2 factor vanish."""
    if cutoff < 2:
        raise ValueError("cutoff must be >= 2")
    if N % 2 == 0:
        raise SeriesVanishesError(2, 0.0)
    value = 1.0
    for p in _primes_up_to(cutoff):
        if N % p == 0:
            value *= 1.0 - 1.0 / (p - 1) ** 2
        else:
            value *= 1.0 + 1.0 / (p - 1) ** 3
    return value
