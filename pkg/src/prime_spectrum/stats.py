"""Number-theoretic diagnostics: pi, psi, theta, li, PNT ratio, interval counts.

li integrates 1/ln t from 2 (not the principal-value integral from 0), which
avoids the singularity at t = 1 and matches the comparisons made elsewhere in
the package. Quadrature is adaptive Simpson with a tight per-interval
tolerance; the integrand is smooth on [2, x].
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable

import numpy as np

from .sieve import SeriesMode, Window, build_series, count_primes, sieve_range

_SIMPSON_TOL = 1e-10
_MAX_DEPTH = 50


@dataclass(frozen=True, eq=False)
class IntervalHistogram:
    """Prime counts per fixed-width bucket [k*width, (k+1)*width)."""

    bucket_width: int
    counts: np.ndarray

    @cached_property
    def starts(self) -> np.ndarray:
        return np.arange(len(self.counts), dtype=np.int64) * self.bucket_width

    @property
    def buckets(self) -> list[tuple[int, int]]:
        return [(int(s), int(c)) for s, c in zip(self.starts, self.counts)]


@dataclass(frozen=True)
class PsiComparison:
    """psi(x), li(x) and pi(x) side by side with the sqrt(x) ln(x)^2 bound."""

    x: int
    psi: float
    li: float
    pi_x: int
    bound: float


def _simpson(h: float, fa: float, fm: float, fb: float) -> float:
    return h / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive_simpson(
    f: Callable[[float], float],
    a: float,
    b: float,
    fa: float,
    fm: float,
    fb: float,
    whole: float,
    tol: float,
    depth: int,
) -> float:
    m = 0.5 * (a + b)
    lm = 0.5 * (a + m)
    rm = 0.5 * (m + b)
    flm = f(lm)
    frm = f(rm)
    left = _simpson(m - a, fa, flm, fm)
    right = _simpson(b - m, fm, frm, fb)
    delta = left + right - whole
    if depth <= 0 or abs(delta) <= 15.0 * tol:
        return left + right + delta / 15.0
    return _adaptive_simpson(
        f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1
    ) + _adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)


def li(x: float) -> float:
    """Logarithmic integral of 1/ln t from 2 to x, absolute error < 1e-8."""
    if x < 2:
        raise ValueError(f"li requires x >= 2, got {x}")
    if x == 2:
        return 0.0
    f = lambda t: 1.0 / math.log(t)
    a, b = 2.0, float(x)
    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    whole = _simpson(b - a, fa, fm, fb)
    return _adaptive_simpson(f, a, b, fa, fm, fb, whole, _SIMPSON_TOL, _MAX_DEPTH)


def psi(x: int) -> float:
    """Chebyshev psi(x): sum of von Mangoldt weights log p over n <= x."""
    if x < 2:
        raise ValueError(f"psi requires x >= 2, got {x}")
    return float(build_series(Window(2, x), SeriesMode.LOG_WEIGHTED).values.sum())


def theta(x: int) -> float:
    """Chebyshev theta(x): sum of log p over primes p <= x (<= psi(x))."""
    if x < 2:
        raise ValueError(f"theta requires x >= 2, got {x}")
    return float(np.log(sieve_range(Window(2, x))).sum())


def pnt_ratio(x: int) -> float:
    """pi(x) * ln(x) / x; approaches 1 from above as x grows."""
    if x < 3:
        raise ValueError(f"pnt_ratio requires x >= 3, got {x}")
    return count_primes(x) * math.log(x) / x


def interval_histogram(x_max: int, width: int = 1000) -> IntervalHistogram:
    """Prime counts per bucket [k*width, (k+1)*width) for (k+1)*width <= x_max.

    The first bucket starts at 0 and counts the primes >= 2 below width.
    """
    if width < 1:
        raise ValueError(f"bucket width must be >= 1, got {width}")
    if x_max < width:
        raise ValueError(f"x_max must be >= width, got {x_max} < {width}")
    n_buckets = x_max // width
    end = n_buckets * width - 1
    if end < 2:
        counts = np.zeros(n_buckets, dtype=np.int64)
    else:
        primes = sieve_range(Window(2, end))
        counts = np.bincount(primes // width, minlength=n_buckets)
    return IntervalHistogram(bucket_width=width, counts=counts.astype(np.int64))


def psi_comparison(x: int) -> PsiComparison:
    """Bundle psi(x), li(x), pi(x) and the classical desk-scale error bound."""
    if x < 3:
        raise ValueError(f"psi_comparison requires x >= 3, got {x}")
    return PsiComparison(
        x=x,
        psi=psi(x),
        li=li(x),
        pi_x=count_primes(x),
        bound=math.sqrt(x) * math.log(x) ** 2,
    )


def dirichlet_partial_sums(a: float, n_terms: int) -> tuple[float, float]:
    """Partial sums of sum 1/n^a and of the prime-indicator sum L(n)/n^a.

    Diagnostic only: the two series are NOT equal (the second runs over
    primes alone), and no identity between them is claimed. Returned as
    (full_sum, prime_sum) over n <= n_terms.
    """
    if a <= 1:
        raise ValueError(f"exponent must satisfy a > 1, got {a}")
    if n_terms < 2:
        raise ValueError(f"n_terms must be >= 2, got {n_terms}")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    full = float(np.sum(n**-a))
    primes = sieve_range(Window(2, n_terms)).astype(np.float64)
    return full, float(np.sum(primes**-a))
