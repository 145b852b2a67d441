"""Discrete Fourier transform of a sampled series, slow reference and fast path.

Conventions (fixed for the whole package):

* indices are re-based to 0..N-1 relative to the window start, so the
  transform is the standard DFT; the physical offset of the window appears
  only as a linear phase on the coefficients and is not compensated
  (amplitude spectra are offset-invariant);
* frequency grid in cycles per sample, nu = l / N in [0, 1); the positive
  half-spectrum ends at the Nyquist frequency nu = 1/2;
* forward transform carries no prefactor; the inverse carries 1/N.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .sieve import MangoldtSeries, SeriesMode, Window

#: Largest N the quadratic reference path will accept.
DEFAULT_NAIVE_CAP = 1 << 14


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Complex DFT coefficients of a series, with derived views.

    coefficients[l] corresponds to grid frequency l / N cycles per sample.
    For the real-valued input series of this package, coefficients[0] is real
    and equals the series sum, and coefficients[N-l] are the conjugates of
    coefficients[l].
    """

    coefficients: np.ndarray
    source_window: Window
    source_mode: SeriesMode

    @property
    def n_points(self) -> int:
        return len(self.coefficients)

    @cached_property
    def freq_grid(self) -> np.ndarray:
        """Grid frequencies nu = l / N, cycles per sample."""
        n = self.n_points
        return np.arange(n, dtype=np.float64) / n

    @cached_property
    def amplitudes(self) -> np.ndarray:
        return np.abs(self.coefficients)

    @cached_property
    def phases(self) -> np.ndarray:
        """Coefficient arguments, normalized into (-pi, pi]."""
        ph = np.angle(self.coefficients)
        ph[ph == -np.pi] = np.pi
        return ph


def _require_length(series: MangoldtSeries) -> int:
    n = series.n_points
    if n < 2:
        raise ValueError(f"transform requires a series of length >= 2, got {n}")
    return n


def dft_naive(series: MangoldtSeries, naive_cap: int = DEFAULT_NAIVE_CAP) -> Spectrum:
    """Direct O(N^2) evaluation of the DFT sum; the oracle for dft_fast.

    Each coefficient is the plain sum over the series of value * exp(-2i pi
    l n / N). Refuses series longer than naive_cap; use dft_fast there.
    """
    n = _require_length(series)
    if n > naive_cap:
        raise ValueError(
            f"series length {n} exceeds the naive cap {naive_cap}; "
            "use dft_fast for long series"
        )
    values = np.asarray(series.values, dtype=np.float64)
    idx = np.arange(n)
    coeffs = np.empty(n, dtype=np.complex128)
    for l in range(n):
        coeffs[l] = np.sum(values * np.exp((-2j * np.pi * l / n) * idx))
    return Spectrum(coeffs, series.window, series.mode)


def dft_fast(series: MangoldtSeries) -> Spectrum:
    """O(N log N) DFT for arbitrary N, numerically matching dft_naive."""
    n = _require_length(series)
    coeffs = np.fft.fft(np.asarray(series.values, dtype=np.float64))
    return Spectrum(coeffs, series.window, series.mode)


def inverse_dft(spectrum: Spectrum) -> np.ndarray:
    """Real part of (1/N) sum_l X(l) exp(+2i pi l i / N).

    For spectra of real series the imaginary residue is below 1e-9 and is
    discarded.
    """
    return np.fft.ifft(spectrum.coefficients).real


def _dft_bin_raw(values: np.ndarray, index: int) -> complex:
    """The DFT sum at an arbitrary (possibly >= N) integer bin index.

    The exponent index*n is reduced modulo N in exact integer arithmetic;
    exp(-2i pi m) = 1 for integer m, so this is the analytically identical,
    numerically robust evaluation.
    """
    n = values.size
    residues = (index * np.arange(n, dtype=np.int64)) % n
    return complex(np.sum(values * np.exp((-2j * np.pi / n) * residues)))


def check_periodicity(series: MangoldtSeries, z: int, l: int) -> float:
    """|X(l + zN) - X(l)| from direct evaluation of the DFT sum at both bins.

    The spectrum is N-periodic in the bin index, so the deviation is
    analytically zero; the returned value is pure floating-point residue.
    """
    n = _require_length(series)
    if z < 1:
        raise ValueError(f"period multiple z must be >= 1, got {z}")
    if not 0 <= l < n:
        raise ValueError(f"bin index l must be in [0, {n}), got {l}")
    values = np.asarray(series.values, dtype=np.float64)
    return abs(_dft_bin_raw(values, l + z * n) - _dft_bin_raw(values, l))
