"""Spectrum analysis: peak extraction, grid-convergence checks, Fermat spiral.

Peaks live on the positive half-spectrum (bins 1 .. floor(N/2)); the DC bin
is never a peak. The Fermat (parabolic) spiral r = a*f uses the bin index
directly as the spiral parameter f, interpreted in radians.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sieve import Window
from .transform import Spectrum

#: Default peak threshold as a fraction of the largest non-DC amplitude.
DEFAULT_PEAK_FRACTION = 0.25


@dataclass(frozen=True)
class Peak:
    bin: int
    frequency: float  # cycles per sample, bin / N
    amplitude: float
    phase: float


@dataclass(frozen=True, eq=False)
class PeakSet:
    """Half-spectrum bins whose amplitude clears a threshold, ascending by bin."""

    entries: tuple[Peak, ...]
    threshold: float
    source_window: Window
    n_points: int

    def __len__(self) -> int:
        return len(self.entries)

    def bins(self) -> np.ndarray:
        return np.array([p.bin for p in self.entries], dtype=np.int64)

    def frequencies(self) -> np.ndarray:
        return np.array([p.frequency for p in self.entries], dtype=np.float64)

    def amplitudes(self) -> np.ndarray:
        return np.array([p.amplitude for p in self.entries], dtype=np.float64)

    def phases(self) -> np.ndarray:
        return np.array([p.phase for p in self.entries], dtype=np.float64)


@dataclass(frozen=True, eq=False)
class SpiralTrace:
    """Points (f, x, y) of the parabolic spiral x = a f cos f, y = a f sin f."""

    f: np.ndarray
    x: np.ndarray
    y: np.ndarray
    scale: float = 1.0

    def __len__(self) -> int:
        return len(self.f)

    def points(self) -> list[tuple[float, float, float]]:
        return [
            (float(f), float(x), float(y))
            for f, x, y in zip(self.f, self.x, self.y)
        ]

    def arc_length(self) -> np.ndarray:
        """Cumulative chordal arc length along the trace."""
        dx = np.diff(self.x)
        dy = np.diff(self.y)
        return np.concatenate(([0.0], np.cumsum(np.hypot(dx, dy))))


def default_threshold(spectrum: Spectrum, fraction: float = DEFAULT_PEAK_FRACTION) -> float:
    """fraction * max non-DC amplitude; the package-wide peak default."""
    return fraction * float(spectrum.amplitudes[1:].max())


def extract_peaks(spectrum: Spectrum, threshold: float) -> PeakSet:
    """All half-spectrum bins with amplitude >= threshold (DC excluded).

    The comparison is closed, so the result is deterministic with no
    tie-breaking sensitivity. A threshold above the maximum amplitude yields
    an empty peak set, not an error.
    """
    if not threshold > 0:
        raise ValueError(f"threshold must be positive, got {threshold}")
    n = spectrum.n_points
    half = n // 2
    amps = spectrum.amplitudes
    phases = spectrum.phases
    entries = tuple(
        Peak(
            bin=int(l),
            frequency=l / n,
            amplitude=float(amps[l]),
            phase=float(phases[l]),
        )
        for l in range(1, half + 1)
        if amps[l] >= threshold
    )
    return PeakSet(entries, float(threshold), spectrum.source_window, n)


def ratio_convergence(source: PeakSet | Spectrum, t: int) -> float:
    """Ratio of consecutive grid frequencies f_{t+1} / f_t = (t+1) / t.

    A statement about the uniform frequency grid itself: strictly decreasing
    in t and converging to 1 toward the half-spectrum, mirroring the shape of
    the prime number theorem ratio.
    """
    n = source.n_points
    if t < 1 or t + 1 > n // 2:
        raise ValueError(
            f"t must satisfy 1 <= t and t+1 <= {n // 2} (half-spectrum), got {t}"
        )
    return (t + 1) / t


def reciprocal_convergence(t: int, n: int) -> float:
    """Reciprocal grid frequency 1 / f_t = N / t in samples per cycle.

    At the Nyquist bin t = N/2 this equals 2 (the reciprocal of nu = 1/2);
    at t = N it reaches 1, the reciprocal of the sampling rate itself.
    """
    if n < 2:
        raise ValueError(f"grid size must be >= 2, got {n}")
    if t < 1 or t > n:
        raise ValueError(f"t must be in [1, {n}], got {t} (1/f_0 is undefined)")
    return n / t


def fermat_spiral(f_values: np.ndarray, a: float = 1.0) -> SpiralTrace:
    """Spiral points for arbitrary parameter values: (a f cos f, a f sin f)."""
    if not a > 0:
        raise ValueError(f"spiral scale must be positive, got {a}")
    f = np.asarray(f_values, dtype=np.float64)
    r = a * f
    return SpiralTrace(f=f, x=r * np.cos(f), y=r * np.sin(f), scale=a)


def spiral_trace(peaks: PeakSet, a: float = 1.0) -> SpiralTrace:
    """One spiral point per peak, using the bin index as the parameter f."""
    return fermat_spiral(peaks.bins().astype(np.float64), a=a)
