"""Rebuild a series from its spectrum and recover prime locations.

The supported path is amplitude-phase resynthesis: the series is the DC term
plus one cosine per positive-frequency bin,

    value(i) = (1/N) * [X(0) + 2 * sum_l A_l cos(2 pi l i / N + phi_l) + nyq],

where the Nyquist term (even N only) enters once, undoubled. With every bin
included this is algebraically identical to the inverse DFT of a real-input
spectrum, so the original series is restored to floating-point accuracy and
thresholding the result recovers the prime set exactly.

Top-k reconstruction keeps the DC term plus the k largest-amplitude bins;
detection quality then degrades gracefully and is reported, not asserted.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .sieve import SeriesMode, build_series
from .transform import Spectrum

#: Per-bin chunk size for the resynthesis accumulator (memory bound).
_CHUNK = 256

#: Detection thresholds: midpoint between 0 and the smallest nonzero weight.
DETECTION_THRESHOLD = {
    SeriesMode.INDICATOR: 0.5,
    SeriesMode.LOG_WEIGHTED: 0.5 * np.log(2.0),
}


@dataclass(frozen=True, eq=False)
class Reconstruction:
    """Resynthesized series plus the prime locations recovered from it.

    residual is the max absolute deviation from the original series of the
    source window. In log-weighted mode the detected positions are prime
    power locations, since those carry nonzero weight there.
    """

    values: np.ndarray
    detected_primes: np.ndarray
    residual: float
    components_used: int


def _positive_bins(n: int) -> np.ndarray:
    """Half-spectrum bins 1 .. floor(N/2); includes Nyquist for even N."""
    return np.arange(1, n // 2 + 1, dtype=np.int64)


def _amplitude_order(spectrum: Spectrum) -> np.ndarray:
    """Positive bins sorted by descending amplitude, ties by ascending bin."""
    bins = _positive_bins(spectrum.n_points)
    return bins[np.lexsort((bins, -spectrum.amplitudes[bins]))]


def _resynthesize(spectrum: Spectrum, bins: np.ndarray) -> np.ndarray:
    """DC term plus the cosine components of the given positive bins.

    The phase angle 2 pi l i / N is reduced modulo N in integer arithmetic
    before the cosine, which keeps the evaluation exact-to-rounding even for
    large l * i products.
    """
    n = spectrum.n_points
    amps = spectrum.amplitudes
    phases = spectrum.phases
    i = np.arange(n, dtype=np.int64)
    acc = np.full(n, spectrum.coefficients[0].real / n)
    nyquist = n // 2 if n % 2 == 0 else -1
    for lo in range(0, len(bins), _CHUNK):
        ls = bins[lo : lo + _CHUNK]
        residues = (ls[:, None] * i[None, :]) % n
        theta = (2.0 * np.pi / n) * residues + phases[ls][:, None]
        weights = np.where(ls == nyquist, 1.0, 2.0) * amps[ls]
        acc += (weights[:, None] * np.cos(theta)).sum(axis=0) / n
    return acc


def _finish(spectrum: Spectrum, values: np.ndarray, components: int) -> Reconstruction:
    original = build_series(spectrum.source_window, spectrum.source_mode).values
    threshold = DETECTION_THRESHOLD[spectrum.source_mode]
    detected = spectrum.source_window.start + np.flatnonzero(values >= threshold)
    residual = float(np.abs(values - original).max())
    return Reconstruction(
        values=values,
        detected_primes=detected.astype(np.int64),
        residual=residual,
        components_used=components,
    )


def reconstruct_full(spectrum: Spectrum) -> Reconstruction:
    """Resynthesis from every bin; restores the original series to < 1e-9."""
    bins = _positive_bins(spectrum.n_points)
    return _finish(spectrum, _resynthesize(spectrum, bins), len(bins))


def reconstruct_topk(spectrum: Spectrum, k: int) -> Reconstruction:
    """Resynthesis from the DC bin plus the k largest-amplitude bins.

    k may run up to ceil(N/2); for odd N that exceeds the floor(N/2)
    available bins by one, in which case every bin is used.
    """
    n = spectrum.n_points
    k_cap = (n + 1) // 2
    if not 1 <= k <= k_cap:
        raise ValueError(f"k must be in [1, {k_cap}] for N={n}, got {k}")
    selected = _amplitude_order(spectrum)[:k]
    return _finish(spectrum, _resynthesize(spectrum, selected), len(selected))


def reconstruct_eq13_strict(spectrum: Spectrum, k: int | None = None) -> np.ndarray:
    """Experimental single-omega sine superposition, for inspection only.

    Sums A_t * sin(f_t + omega * i) over the chosen bins with f_t the bin
    index and a single omega = 2 pi / N, scaled by 1/N. All terms share one
    frequency, so this cannot restore the series; it exists to make that
    degeneracy inspectable. No correctness claim is attached to the output.
    """
    n = spectrum.n_points
    bins = _amplitude_order(spectrum) if k is not None else _positive_bins(n)
    if k is not None:
        k_cap = (n + 1) // 2
        if not 1 <= k <= k_cap:
            raise ValueError(f"k must be in [1, {k_cap}] for N={n}, got {k}")
        bins = bins[:k]
    i = np.arange(n, dtype=np.float64)
    amps = spectrum.amplitudes
    omega = 2.0 * np.pi / n
    acc = np.zeros(n, dtype=np.float64)
    for l in bins:
        acc += amps[l] * np.sin(float(l) + omega * i)
    return acc / n
