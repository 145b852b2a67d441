#!/usr/bin/env python3
"""Spike view of the prime indicator series.

Builds the indicator series over [2, 100] (value 1 exactly at primes, 0
elsewhere) and its log-weighted cousin (von Mangoldt weights, nonzero at all
prime powers), prints both, and renders the spike figures as SVG.
"""
from pathlib import Path

from prime_spectrum import SeriesMode, Window, build_series, svg

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    window = Window(2, 100)

    indicator = build_series(window)
    ns = window.integers()
    primes = ns[indicator.values == 1.0]
    print(f"indicator series over [{window.start}, {window.end}]: "
          f"{int(indicator.values.sum())} primes")
    print("primes:", primes.tolist())
    (OUT / "series_indicator.svg").write_text(
        svg.spike_figure(ns, indicator.values, "prime indicator series, 2..100")
    )

    weighted = build_series(window, SeriesMode.LOG_WEIGHTED)
    powers = ns[(weighted.values > 0) & (indicator.values == 0)]
    print("higher prime powers carrying log p weight:", powers.tolist())
    print(f"cumulative weight (Chebyshev psi): {weighted.values.sum():.4f}")
    (OUT / "series_log_weighted.svg").write_text(
        svg.spike_figure(ns, weighted.values, "von Mangoldt weights, 2..100", ylabel="log p")
    )
    print(f"wrote {OUT}/series_indicator.svg and {OUT}/series_log_weighted.svg")


if __name__ == "__main__":
    main()
