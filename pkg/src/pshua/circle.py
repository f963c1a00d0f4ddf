"""Dirichlet rational approximation, major/minor arc dissection, and
bandwidth-exact circle integrals.

The dissection follows Q = floor(N**sigma), tau = N**(1-sigma), with major
arcs [a/q - 1/(q tau), a/q + 1/(q tau)] over reduced fractions a/q, q <= Q,
inside the unit window [1/tau, 1 + 1/tau].

Full-interval integrals of products of prime exponential sums against
e(-N alpha) are trigonometric-polynomial integrals, so uniform sampling at
M >= bandwidth + 1 points is exact up to roundoff; the sampling is done
with FFTs.  Arc-restricted integrals use adaptive Simpson quadrature with a
reported error estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import CapacityError
from .psprimes import Gamma, PrimeSieve, kth_root_floor, ps_member_mask
from . import expsums

DEFAULT_SIGMA = Fraction(1, 6)


@dataclass(frozen=True)
class RationalApprox:
    """alpha = a/q + lam with gcd(a,q)=1, 1 <= q <= tau, |lam| <= 1/(q tau)."""

    a: int
    q: int
    lam: float

    @property
    def value(self) -> float:
        return self.a / self.q + self.lam


def dirichlet_approx(alpha, tau: float) -> RationalApprox:
    """First continued-fraction convergent a/q of alpha with q <= tau and
    |alpha - a/q| <= 1/(q tau).  Existence is classical; the function is
    total for tau >= 1.

    Accepts floats (treated exactly through their dyadic value) as well as
    Fractions/ints; all comparisons are exact rational arithmetic.  A tie
    |alpha - a/q| = 1/(q tau) advances to the next convergent, so an exact
    rational alpha = a/q with q <= tau always comes back with lam = 0.
    """
    if tau < 1:
        raise ValueError("tau must be >= 1")
    x = Fraction(alpha)
    tau_f = Fraction(tau)
    a0 = x.numerator // x.denominator
    p_prev, q_prev = 1, 0
    p, q = a0, 1
    # Euclidean remainders drive the continued fraction
    rem = x.numerator - a0 * x.denominator
    den = x.denominator
    while True:
        err = abs(x - Fraction(p, q))
        if err * q * tau_f < 1 or rem == 0:
            return RationalApprox(p, q, float(x - Fraction(p, q)))
        a_i = den // rem
        den, rem = rem, den - a_i * rem
        p, p_prev = a_i * p + p_prev, p
        q, q_prev = a_i * q + q_prev, q
        if q > tau_f:
            # the previous convergent already satisfies the lemma bound
            return RationalApprox(p_prev, q_prev, float(x - Fraction(p_prev, q_prev)))


@dataclass(frozen=True)
class Arc:
    a: int
    q: int
    center: float
    halfwidth: float


@dataclass
class ArcDissection:
    """Farey system of major arcs for the window [1/tau, 1 + 1/tau]."""

    N: int
    sigma: Fraction
    Q: int
    tau: float
    arcs: list[Arc] = field(repr=False)

    @classmethod
    def build(cls, N: int, sigma: Fraction = DEFAULT_SIGMA) -> "ArcDissection":
        sigma = Fraction(sigma)
        if not (0 < sigma <= Fraction(1, 6)):
            raise ValueError("sigma must lie in (0, 1/6]")
        # Q = floor(N**sigma) exactly via integer roots
        Q = kth_root_floor(N**sigma.numerator, sigma.denominator)
        tau = float(N) ** float(1 - sigma)
        arcs = []
        for q in range(1, Q + 1):
            hw = 1.0 / (q * tau)
            for a in range(1, q + 1):
                if math.gcd(a, q) == 1:
                    arcs.append(Arc(a, q, a / q, hw))
        return cls(N, sigma, Q, tau, arcs)

    @property
    def window(self) -> tuple[float, float]:
        return 1.0 / self.tau, 1.0 + 1.0 / self.tau


# absolute slack so float-computed boundary points land inside their arc
_BOUNDARY_SLOP = 2.0**-46


def classify(alpha: float, d: ArcDissection):
    """Major(a, q) or None (minor) for alpha in the unit window.

    Ties at arc boundaries resolve to major (within float roundoff).  The
    smallest q whose arc contains alpha wins.
    """
    lo, hi = d.window
    if not (lo - _BOUNDARY_SLOP <= alpha <= hi + _BOUNDARY_SLOP):
        raise ValueError(f"alpha={alpha} outside window [{lo}, {hi}]")
    for q in range(1, d.Q + 1):
        hw = 1.0 / (q * d.tau)
        for a in {math.floor(alpha * q), math.ceil(alpha * q)}:
            if (
                1 <= a <= q
                and math.gcd(a, q) == 1
                and abs(alpha - a / q) <= hw + _BOUNDARY_SLOP
            ):
                return (a, q)
    return None


def _merged_arc_intervals(d: ArcDissection) -> list[tuple[float, float]]:
    lo, hi = d.window
    spans = []
    for arc in d.arcs:
        s = max(arc.center - arc.halfwidth, lo)
        e = min(arc.center + arc.halfwidth, hi)
        if e > s:
            spans.append((s, e))
    spans.sort()
    merged = []
    for s, e in spans:
        if merged and s <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], e))
        else:
            merged.append((s, e))
    return merged


def major_measure(d: ArcDissection) -> float:
    """Total length of the union of major arcs, overlaps merged."""
    total = math.fsum(e - s for s, e in _merged_arc_intervals(d))
    bound = 2.0 * d.Q / d.tau
    assert total <= bound * (1.0 + 1e-12), (total, bound)
    return total


@dataclass(frozen=True)
class SumSpec:
    """One factor of a circle integrand: S1, S3, T1, or T3."""

    kind: str
    gamma: Gamma | None = None

    def __post_init__(self):
        if self.kind not in ("S1", "S3", "T1", "T3"):
            raise ValueError(f"unknown sum kind {self.kind!r}")
        if self.kind in ("T1", "T3") and self.gamma is None:
            raise ValueError(f"{self.kind} needs a gamma")


S1 = SumSpec("S1")
S3 = SumSpec("S3")


class _FactorEvaluator:
    """A factor pinned to (spec, N, sieve): frequency list plus weights."""

    def __init__(self, spec: SumSpec, N: int, sieve: PrimeSieve):
        cubic = spec.kind in ("S3", "T3")
        bound = kth_root_floor(N, 3) if cubic else N
        if bound > sieve.limit:
            raise CapacityError(f"{spec.kind} at N={N} needs sieve to {bound}")
        ps = sieve.primes_up_to(bound)
        if spec.gamma is not None:
            mask = ps_member_mask(sieve, spec.gamma)[: len(ps)]
            ps = ps[mask]
            self.weights = expsums._weights(ps, spec.gamma)
        else:
            self.weights = None
        self.args = expsums._cubes(ps) if cubic else ps
        self.max_frequency = int(self.args[-1]) if len(self.args) else 0

    def coefficients(self, M: int) -> np.ndarray:
        coeff = np.zeros(M)
        if len(self.args):
            coeff[self.args] = 1.0 if self.weights is None else self.weights
        return coeff

    def at(self, alpha: float) -> complex:
        acc = expsums._accumulate(
            expsums.phase_fractions(expsums.Alpha.from_float(alpha), self.args),
            self.weights,
        )
        return acc.value


@dataclass(frozen=True)
class IntegralResult:
    value: complex
    domain: str
    samples: int | None = None
    error_estimate: float | None = None


def _adaptive_simpson(f, lo, hi, tol, max_depth=24):
    """Composite adaptive Simpson for complex-valued f; returns (value, err)."""
    flo, fmid, fhi = f(lo), f(0.5 * (lo + hi)), f(hi)
    whole = (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(a, b, fa, fm, fb, whole, tol, depth):
        m = 0.5 * (a + b)
        lm, rm = 0.5 * (a + m), 0.5 * (m + b)
        flm, frm = f(lm), f(rm)
        left = (m - a) / 6.0 * (fa + 4.0 * flm + fm)
        right = (b - m) / 6.0 * (fm + 4.0 * frm + fb)
        err = abs(left + right - whole) / 15.0
        if err <= tol or depth >= max_depth:
            return left + right + (left + right - whole) / 15.0, err
        lv, le = recurse(a, m, fa, flm, fm, left, tol / 2.0, depth + 1)
        rv, re_ = recurse(m, b, fm, frm, fb, right, tol / 2.0, depth + 1)
        return lv + rv, le + re_

    return recurse(lo, hi, flo, fmid, fhi, whole, tol, 0)


def circle_integral(
    N: int,
    factors,
    sieve: PrimeSieve,
    domain: str = "full",
    dissection: ArcDissection | None = None,
    samples: int | None = None,
    tol: float = 1e-8,
) -> IntegralResult:
    """Integral of prod(factors)(alpha) * e(-N alpha) d alpha.

    domain "full": exact over one period via uniform sampling at
    M >= bandwidth + 1 points (discrete orthogonality); refuses smaller M.
    domain "major"/"minor": adaptive quadrature over the dissection's arcs
    (resp. their complement in the window), with an error estimate.
    """
    evaluators = {}
    for spec in factors:
        if spec not in evaluators:
            evaluators[spec] = _FactorEvaluator(spec, N, sieve)

    if domain == "full":
        bandwidth = sum(evaluators[s].max_frequency for s in factors) + N
        M = bandwidth + 1 if samples is None else samples
        if M < bandwidth + 1:
            raise ValueError(
                f"M={M} below bandwidth+1={bandwidth + 1}: exactness would break"
            )
        grids = {s: M * np.fft.ifft(ev.coefficients(M)) for s, ev in evaluators.items()}
        prod = np.ones(M, dtype=complex)
        for spec in factors:
            prod = prod * grids[spec]
        value = np.fft.fft(prod)[N % M] / M
        return IntegralResult(complex(value), "full", samples=M)

    if domain not in ("major", "minor"):
        raise ValueError(f"unknown domain {domain!r}")
    if dissection is None:
        dissection = ArcDissection.build(N)

    evs = [evaluators[s] for s in factors]

    def integrand(alpha: float) -> complex:
        # e(-N alpha) via the same exact mod-1 reduction as the factors
        ph = expsums.phase_fractions(expsums.Alpha.from_float(alpha), [N])[0]
        out = complex(np.exp(2j * np.pi * ph)).conjugate()
        for ev in evs:
            out *= ev.at(alpha)
        return out

    major_ivs = _merged_arc_intervals(dissection)
    if domain == "major":
        intervals = major_ivs
    else:
        lo, hi = dissection.window
        intervals = []
        edge = lo
        for s, e in major_ivs:
            if s > edge:
                intervals.append((edge, s))
            edge = max(edge, e)
        if edge < hi:
            intervals.append((edge, hi))

    total = 0.0 + 0.0j
    err = 0.0
    for s, e in intervals:
        v, ee = _adaptive_simpson(integrand, s, e, tol)
        total += v
        err += ee
    return IntegralResult(total, domain, error_estimate=err)
