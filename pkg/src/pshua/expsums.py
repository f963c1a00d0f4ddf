"""Phase-accurate prime exponential sums at linear and cubic arguments.

A frequency alpha is carried as a/q + lambda with gcd(a,q) = 1, so the
phase of a term with integer argument t reduces exactly:

    alpha*t mod 1  =  (a*t mod q)/q  +  (lambda*t mod 1),

where the rational part is big-integer modular arithmetic and the lambda
part is reduced through the exact dyadic representation of the float
(num/2**e), again in integers.  Naive double-precision alpha*t**3 would
lose every phase bit once t**3 passes 2**53.

Sums are accumulated in ascending-argument order with exactly rounded
(Shewchuk) summation per component, so equal term streams give bitwise
equal results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError
from .psprimes import Gamma, PrimeSieve, kth_root_floor, ps_member_mask

_EPS = float(np.finfo(np.float64).eps)
# headroom multiplier covering phase evaluation plus final rounding
_BUDGET_FACTOR = 4.0


@dataclass(frozen=True)
class Alpha:
    """alpha = a/q + lam with gcd(a,q) = 1, 0 <= a < q, |lam| < 1/q."""

    a: int
    q: int
    lam: float = 0.0

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be >= 1")
        if not (0 <= self.a < self.q or (self.q == 1 and self.a == 0)):
            raise ValueError("require 0 <= a < q")
        if math.gcd(self.a, self.q) != 1 and self.a != 0:
            raise ValueError("require gcd(a, q) = 1")
        if abs(self.lam) >= 1.0 / self.q:
            raise ValueError("require |lam| < 1/q")

    @classmethod
    def from_fraction(cls, a: int, q: int, lam: float = 0.0) -> "Alpha":
        """Reduce a/q, fold a into [0, q), keep the residual lam."""
        if q == 0:
            raise ValueError("q must be nonzero")
        if q < 0:
            a, q = -a, -q
        g = math.gcd(a, q)
        a, q = a // g, q // g
        return cls(a % q, q, lam)

    @classmethod
    def from_float(cls, x: float) -> "Alpha":
        return cls(0, 1, x - math.floor(x))

    @classmethod
    def parse(cls, text: str) -> "Alpha":
        """Parse 'a/q', 'a/q+lam', 'a/q-lam', or a bare float."""
        text = text.strip()
        if "/" in text:
            num, rest = text.split("/", 1)
            lam = 0.0
            body = rest
            for sep in ("+", "-"):
                idx = rest.find(sep, 1)
                if idx > 0:
                    body = rest[:idx]
                    lam = float(rest[idx:])
                    break
            return cls.from_fraction(int(num), int(body), lam)
        return cls.from_float(float(text))

    @property
    def value(self) -> float:
        return self.a / self.q + self.lam

    def negated(self) -> "Alpha":
        return Alpha((-self.a) % self.q, self.q, -self.lam)

    def __str__(self) -> str:
        if self.lam == 0.0:
            return f"{self.a}/{self.q}"
        return f"{self.a}/{self.q}{self.lam:+.17g}"


@dataclass
class ComplexAccumulator:
    """Exactly rounded complex sum plus a conservative error budget.

    error_budget >= terms * (unit roundoff * max term magnitude) always
    holds; the actual summation error is far below it.
    """

    re: float
    im: float
    terms: int
    error_budget: float

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __abs__(self) -> float:
        return abs(complex(self.re, self.im))


def phase_fractions(alpha: Alpha, args) -> np.ndarray:
    """alpha*t mod 1 (up to one representable fold) for each integer t.

    args must ascend.  Arguments or products past int64 range (cubic
    arguments get there quickly) drop to exact Python-int arithmetic.
    """
    n = len(args)
    if n == 0:
        return np.zeros(0)
    a, q = alpha.a, alpha.q
    if a == 0 or q == 1:
        phases = np.zeros(n)
    elif a * int(args[-1]) < 2**62:
        arr = np.asarray(args, dtype=np.int64)
        phases = ((a * arr) % q) / q
    else:
        phases = np.array([(a * int(t)) % q for t in args], dtype=np.float64)
        phases /= q
    lam = alpha.lam
    if lam != 0.0:
        num, den = lam.as_integer_ratio()  # den is a power of two
        frac = np.array([(num * int(t)) % den for t in args], dtype=np.float64)
        phases = phases + frac / den
    return phases


def _cubes(ps: np.ndarray):
    """p**3 for each prime, exact past the int64 boundary."""
    if len(ps) and int(ps[-1]) ** 3 >= 2**62:
        return [int(p) ** 3 for p in ps.tolist()]
    return ps * ps * ps


def _accumulate(phases: np.ndarray, weights: np.ndarray | None) -> ComplexAccumulator:
    n = len(phases)
    if n == 0:
        return ComplexAccumulator(0.0, 0.0, 0, 0.0)
    z = np.exp((2j * np.pi) * phases)
    if weights is not None:
        z = z * weights
        max_mag = float(weights.max())
    else:
        max_mag = 1.0
    re = math.fsum(z.real.tolist())
    im = math.fsum(z.imag.tolist())
    return ComplexAccumulator(re, im, n, _BUDGET_FACTOR * _EPS * n * max_mag)


def _weights(primes: np.ndarray, gamma: Gamma) -> np.ndarray:
    g = float(gamma)
    return np.power(primes.astype(np.float64), 1.0 - g) / g


def eval_S1(N: int, alpha: Alpha, sieve: PrimeSieve) -> ComplexAccumulator:
    """sum over primes p <= N of e(alpha * p)."""
    if N > sieve.limit:
        raise CapacityError(f"N={N} exceeds sieve limit {sieve.limit}")
    ps = sieve.primes_up_to(N)
    return _accumulate(phase_fractions(alpha, ps), None)


def eval_S3(N: int, alpha: Alpha, sieve: PrimeSieve) -> ComplexAccumulator:
    """sum over primes p <= floor(N**(1/3)) of e(alpha * p**3)."""
    P = kth_root_floor(N, 3)
    if P > sieve.limit:
        raise CapacityError(f"P={P} exceeds sieve limit {sieve.limit}")
    ps = sieve.primes_up_to(P)
    return _accumulate(phase_fractions(alpha, _cubes(ps)), None)


def eval_T1(
    N: int, alpha: Alpha, gamma: Gamma, sieve: PrimeSieve
) -> ComplexAccumulator:
    """Weighted sum over set members p <= N of (p**(1-gamma)/gamma) e(alpha p).

    At gamma = 1 this is bitwise equal to eval_S1 (same term order, weights
    exactly 1.0).
    """
    if N > sieve.limit:
        raise CapacityError(f"N={N} exceeds sieve limit {sieve.limit}")
    ps = sieve.primes_up_to(N)
    mask = ps_member_mask(sieve, gamma)[: len(ps)]
    members = ps[mask]
    return _accumulate(phase_fractions(alpha, members), _weights(members, gamma))


def eval_T3(
    N: int, alpha: Alpha, gamma: Gamma, sieve: PrimeSieve
) -> ComplexAccumulator:
    """As eval_T1 with cubic arguments and p <= floor(N**(1/3))."""
    P = kth_root_floor(N, 3)
    if P > sieve.limit:
        raise CapacityError(f"P={P} exceeds sieve limit {sieve.limit}")
    ps = sieve.primes_up_to(P)
    mask = ps_member_mask(sieve, gamma)[: len(ps)]
    members = ps[mask]
    return _accumulate(phase_fractions(alpha, _cubes(members)), _weights(members, gamma))


def psi(x: float) -> float:
    """Sawtooth x - floor(x) - 1/2, in [-1/2, 1/2)."""
    return x - math.floor(x) - 0.5


def nearest_int_distance(x: float) -> float:
    f = x - math.floor(x)
    return min(f, 1.0 - f)


@dataclass(frozen=True)
class PsiExpansion:
    """H-truncated Fourier data for psi at a point."""

    H: int
    truncated_value: float
    g_bound: float


def psi_expansion(theta: float, H: int) -> PsiExpansion:
    """Value of -sum_{0<|h|<=H} e(theta h)/(2 pi i h) plus the envelope
    g = min(1, 1/(H ||theta||)) that caps the truncation error."""
    if H < 1:
        raise ValueError("H must be >= 1")
    h = np.arange(1, H + 1, dtype=np.float64)
    truncated = -math.fsum((np.sin((2.0 * np.pi * theta) * h) / (np.pi * h)).tolist())
    dist = nearest_int_distance(theta)
    g = 1.0 if dist == 0.0 else min(1.0, 1.0 / (H * dist))
    return PsiExpansion(H, truncated, g)


def psi_truncation_audit(theta: float, H: int) -> tuple[float, float]:
    """Error of the H-truncated Fourier expansion of psi at theta.

    Returns (lhs_error, g) with

        lhs_error = |psi(theta) + sum_{0<|h|<=H} e(theta h)/(2 pi i h)|
        g         = min(1, 1/(H*||theta||)),  clamped to 1 at ||theta|| = 0.

    Callers compare lhs_error against C*g for a fitted constant C.
    """
    # the +/-h pair collapses to sin(2 pi theta h)/(pi h), which is real
    exp = psi_expansion(theta, H)
    lhs_error = abs(psi(theta) - exp.truncated_value)
    return lhs_error, exp.g_bound
