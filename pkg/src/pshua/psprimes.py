"""Piatetski-Shapiro prime sets with exact integer membership tests.

A prime p belongs to the set of type gamma = a/b (0 < gamma <= 1) when some
integer n satisfies p = floor(n**(b/a)), equivalently

    p**a <= n**b < (p+1)**a.

Everything on the membership path is big-integer arithmetic; floating point
never decides a boundary case.  The conventional sieve underneath is a
segmented Eratosthenes over a numpy bool table, cacheable on disk.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

import gmpy2
import numpy as np

from .errors import CapacityError

SIEVE_MAGIC = b"PSHUASV1"
_SEGMENT = 1 << 22

# Witnesses sufficient for deterministic Miller-Rabin below 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def kth_root_floor(n: int, k: int) -> int:
    """floor(n**(1/k)) for n >= 0, k >= 1, exactly."""
    if n < 0 or k < 1:
        raise ValueError("kth_root_floor needs n >= 0 and k >= 1")
    if n == 0:
        return 0
    root, _ = gmpy2.iroot(gmpy2.mpz(n), k)
    return int(root)


def kth_root_ceil(n: int, k: int) -> int:
    """ceil(n**(1/k)) for n >= 0, k >= 1, exactly."""
    if n < 0 or k < 1:
        raise ValueError("kth_root_ceil needs n >= 0 and k >= 1")
    if n == 0:
        return 0
    root, exact = gmpy2.iroot(gmpy2.mpz(n), k)
    return int(root) if exact else int(root) + 1


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Gamma:
    """Exact rational gamma = numerator/denominator in (0, 1].

    Stored in lowest terms.  The exponent c = 1/gamma is always derived,
    never stored.
    """

    numerator: int
    denominator: int

    def __post_init__(self):
        a, b = self.numerator, self.denominator
        if b <= 0 or a <= 0 or a > b:
            raise ValueError(f"gamma = {a}/{b} is not in (0, 1]")
        g = math.gcd(a, b)
        if g != 1:
            object.__setattr__(self, "numerator", a // g)
            object.__setattr__(self, "denominator", b // g)

    @classmethod
    def parse(cls, text: str) -> "Gamma":
        """Parse '9/10' or '1' into a Gamma."""
        if "/" in text:
            a, b = text.split("/", 1)
            return cls(int(a), int(b))
        return cls(int(text), 1)

    @property
    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def is_one(self) -> bool:
        return self.numerator == self.denominator

    def __float__(self) -> float:
        return self.numerator / self.denominator

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator}"


ONE = Gamma(1, 1)


@dataclass(frozen=True)
class PSWeight:
    """The weight p**(1-gamma) / gamma attached to a set member."""

    prime: int
    gamma: Gamma
    weight: float

    @classmethod
    def of(cls, prime: int, gamma: Gamma) -> "PSWeight":
        return cls(prime, gamma, ps_weight(prime, gamma))


def ps_weight(p: int, gamma: Gamma) -> float:
    # 1 - gamma == 0.0 exactly at gamma = 1, so the weight is exactly 1.0.
    g = float(gamma)
    return p ** (1.0 - g) / g


def _simple_sieve(limit: int) -> np.ndarray:
    table = np.ones(limit + 1, dtype=bool)
    table[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if table[p]:
            table[p * p :: p] = False
    return table


class PrimeSieve:
    """Primality table up to ``limit`` built by a segmented Eratosthenes.

    ``table[n]`` is True iff n is prime, 0 <= n <= limit.  The table is
    immutable after construction and safely shared across threads.
    """

    def __init__(self, limit: int, table: np.ndarray, source: str = "fresh"):
        if table.shape[0] != limit + 1:
            raise ValueError("table length does not match limit")
        self.limit = limit
        self.source = source
        self._table = table
        self._table.setflags(write=False)
        self._primes = None
        self._member_masks = {}

    @classmethod
    def build(cls, limit: int) -> "PrimeSieve":
        if limit < 1:
            raise ValueError("sieve limit must be >= 1")
        if limit + 1 <= _SEGMENT:
            return cls(limit, _simple_sieve(limit))
        base_limit = math.isqrt(limit)
        base_table = _simple_sieve(base_limit)
        base_primes = np.flatnonzero(base_table)
        table = np.ones(limit + 1, dtype=bool)
        table[:2] = False
        for low in range(0, limit + 1, _SEGMENT):
            high = min(low + _SEGMENT, limit + 1)
            seg = table[low:high]
            for p in base_primes:
                p = int(p)
                # marking starts at p*p, so base primes are never cleared
                start = max(p * p, ((low + p - 1) // p) * p)
                if start >= high:
                    continue
                seg[start - low :: p] = False
        return cls(limit, table)

    def is_prime(self, n: int) -> bool:
        if n > self.limit:
            raise CapacityError(f"{n} exceeds sieve limit {self.limit}")
        if n < 2:
            return False
        return bool(self._table[n])

    def primes(self) -> np.ndarray:
        """All primes <= limit, ascending, as int64."""
        if self._primes is None:
            self._primes = np.flatnonzero(self._table).astype(np.int64)
            self._primes.setflags(write=False)
        return self._primes

    def primes_up_to(self, x: int) -> np.ndarray:
        if x > self.limit:
            raise CapacityError(f"{x} exceeds sieve limit {self.limit}")
        ps = self.primes()
        return ps[: np.searchsorted(ps, x, side="right")]

    def pi(self, x: int) -> int:
        return int(len(self.primes_up_to(x)))

    # cache file: magic, 8-byte little-endian limit, LSB-first bitset
    def save(self, path: str | os.PathLike) -> None:
        packed = np.packbits(self._table, bitorder="little")
        with open(path, "wb") as fh:
            fh.write(SIEVE_MAGIC)
            fh.write(self.limit.to_bytes(8, "little"))
            fh.write(packed.tobytes())

    @classmethod
    def load(cls, path: str | os.PathLike) -> "PrimeSieve":
        with open(path, "rb") as fh:
            magic = fh.read(8)
            if magic != SIEVE_MAGIC:
                raise ValueError(f"bad sieve cache magic {magic!r}")
            limit = int.from_bytes(fh.read(8), "little")
            nbytes = (limit + 1 + 7) // 8
            raw = fh.read(nbytes)
            if len(raw) != nbytes:
                raise ValueError("truncated sieve cache")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        table = bits[: limit + 1].astype(bool)
        return cls(limit, table, source="cache")


def is_ps_member(p: int, gamma: Gamma) -> bool:
    """Exact membership test: does some n satisfy p**a <= n**b < (p+1)**a?

    Equals the indicator [-p**gamma] - [-(p+1)**gamma].  Raises ValueError
    for non-prime p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    a, b = gamma.numerator, gamma.denominator
    if a == b:
        return True
    pa = p**a
    n = kth_root_ceil(pa, b)  # least n with n**b >= p**a
    return n**b < (p + 1) ** a


def ps_member_mask(sieve: PrimeSieve, gamma: Gamma) -> np.ndarray:
    """Boolean mask over sieve.primes() marking members of the gamma set.

    Cached on the sieve; masks are immutable once built.
    """
    key = (gamma.numerator, gamma.denominator)
    mask = sieve._member_masks.get(key)
    if mask is None:
        ps = sieve.primes()
        if gamma.is_one:
            mask = np.ones(len(ps), dtype=bool)
        else:
            a, b = gamma.numerator, gamma.denominator
            out = np.empty(len(ps), dtype=bool)
            for i, p in enumerate(ps.tolist()):
                pa = p**a
                n = kth_root_ceil(pa, b)
                out[i] = n**b < (p + 1) ** a
            mask = out
        mask.setflags(write=False)
        sieve._member_masks[key] = mask
    return mask


def ps_primes_up_to(x: int, gamma: Gamma, sieve: PrimeSieve) -> list[int]:
    """All set members <= x, ascending.

    Generated by walking n and forming p = floor(n**(b/a)) exactly; the
    float path is never consulted.
    """
    if x > sieve.limit:
        raise CapacityError(f"{x} exceeds sieve limit {sieve.limit}")
    if x < 2:
        return []
    a, b = gamma.numerator, gamma.denominator
    if a == b:
        return sieve.primes_up_to(x).tolist()
    table = sieve._table
    out = []
    n = 1
    while True:
        p = kth_root_floor(n**b, a)
        if p > x:
            break
        if p >= 2 and table[p]:
            # floor(n**(b/a)) is strictly increasing for b > a, no dedup needed
            out.append(p)
        n += 1
    return out


def ps_count(x: int, gamma: Gamma, sieve: PrimeSieve) -> tuple[int, float]:
    """(member count up to x, count / (x**gamma / log x))."""
    if x < 3:
        raise ValueError("ps_count needs x >= 3")
    members = ps_primes_up_to(x, gamma, sieve)
    count = len(members)
    expected = x ** float(gamma) / math.log(x)
    return count, count / expected
