"""Prime indicator series, their discrete Fourier spectra, and reconstruction.

The library builds prime-indicator (or von Mangoldt log-weighted) series over
integer windows, transforms them with a slow reference DFT and a fast
arbitrary-length path, analyzes the spectrum (peaks, grid convergence, the
Fermat spiral of consecutive frequencies), resynthesizes the series from
spectral components, and computes classical prime-counting diagnostics.
"""
from ._version import __version__
from .sieve import (
    DEFAULT_BLOCK_SIZE,
    DEFAULT_MAX_END,
    CapacityError,
    MangoldtSeries,
    SeriesMode,
    Window,
    build_series,
    count_primes,
    sieve_range,
)
from .transform import (
    DEFAULT_NAIVE_CAP,
    Spectrum,
    check_periodicity,
    dft_fast,
    dft_naive,
    inverse_dft,
)
from .spectral import (
    DEFAULT_PEAK_FRACTION,
    Peak,
    PeakSet,
    SpiralTrace,
    default_threshold,
    extract_peaks,
    fermat_spiral,
    ratio_convergence,
    reciprocal_convergence,
    spiral_trace,
)
from .reconstruct import (
    DETECTION_THRESHOLD,
    Reconstruction,
    reconstruct_eq13_strict,
    reconstruct_full,
    reconstruct_topk,
)
from .stats import (
    IntervalHistogram,
    PsiComparison,
    dirichlet_partial_sums,
    interval_histogram,
    li,
    pnt_ratio,
    psi,
    psi_comparison,
    theta,
)

__all__ = [
    "__version__",
    "CapacityError",
    "DEFAULT_BLOCK_SIZE",
    "DEFAULT_MAX_END",
    "DEFAULT_NAIVE_CAP",
    "DEFAULT_PEAK_FRACTION",
    "DETECTION_THRESHOLD",
    "IntervalHistogram",
    "MangoldtSeries",
    "Peak",
    "PeakSet",
    "PsiComparison",
    "Reconstruction",
    "SeriesMode",
    "Spectrum",
    "SpiralTrace",
    "Window",
    "build_series",
    "check_periodicity",
    "count_primes",
    "default_threshold",
    "dft_fast",
    "dft_naive",
    "dirichlet_partial_sums",
    "extract_peaks",
    "fermat_spiral",
    "interval_histogram",
    "inverse_dft",
    "li",
    "pnt_ratio",
    "psi",
    "psi_comparison",
    "ratio_convergence",
    "reciprocal_convergence",
    "reconstruct_eq13_strict",
    "reconstruct_full",
    "reconstruct_topk",
    "sieve_range",
    "spiral_trace",
    "theta",
]
