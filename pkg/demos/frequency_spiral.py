#!/usr/bin/env python3
"""Fermat spiral of spectrum frequencies, plus the grid convergence ratios.

Consecutive frequencies f on the uniform DFT grid, mapped through
x = a f cos f, y = a f sin f, trace a parabolic spiral of modulus r = a f.
The ratio f_{t+1}/f_t = (t+1)/t of consecutive grid frequencies decreases
toward 1, echoing the shape of pi(x) ln(x) / x in the prime number theorem.
"""
from pathlib import Path

import numpy as np

from prime_spectrum import (
    Window,
    build_series,
    default_threshold,
    dft_fast,
    extract_peaks,
    fermat_spiral,
    ratio_convergence,
    reciprocal_convergence,
    spiral_trace,
    svg,
)

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    spectrum = dft_fast(build_series(Window(2, 2001)))
    n = spectrum.n_points

    peaks = extract_peaks(spectrum, default_threshold(spectrum))
    print(f"{len(peaks)} peaks above threshold {peaks.threshold:.2f} "
          f"(bins {peaks.bins().tolist()})")
    peak_spiral = spiral_trace(peaks)

    # the spiral over every half-spectrum bin shows the growing turns
    full_spiral = fermat_spiral(np.arange(1.0, 201.0))
    arc = full_spiral.arc_length()
    print(f"first 200 grid bins: modulus grows to {full_spiral.f[-1]:.0f}, "
          f"cumulative arc length {arc[-1]:.1f} (strictly increasing: "
          f"{bool(np.all(np.diff(arc) > 0))})")
    (OUT / "spiral_grid.svg").write_text(
        svg.spiral_figure(full_spiral.x, full_spiral.y, "Fermat spiral of the first 200 grid frequencies")
    )
    if len(peak_spiral) > 1:
        (OUT / "spiral_peaks.svg").write_text(
            svg.spiral_figure(peak_spiral.x, peak_spiral.y, "Fermat spiral of the spectrum peaks")
        )

    print("\nconvergence of consecutive-frequency ratios (grid arithmetic):")
    for t in (1, 10, 100, 500, n // 2 - 1):
        print(f"  t={t:4d}  f_t+1/f_t = {ratio_convergence(spectrum, t):.6f}"
              f"   1/f_t = {reciprocal_convergence(t, n):.3f} samples/cycle")
    print(f"  1/f at Nyquist: {reciprocal_convergence(n // 2, n):.1f}, "
          f"at the sampling rate: {reciprocal_convergence(n, n):.1f}")
    print(f"wrote spiral figures to {OUT}/")


if __name__ == "__main__":
    main()
