#!/usr/bin/env python3
"""Classical prime-counting diagnostics at desk scale.

Tabulates pi(x), the logarithmic integral li(x) (from 2), Chebyshev psi(x)
and the prime number theorem ratio pi(x) ln(x) / x for x up to one million,
then renders the new-primes-per-interval histogram that shows the thinning
of primes along the number line.
"""
import math
from pathlib import Path

from prime_spectrum import count_primes, interval_histogram, li, pnt_ratio, psi, svg

OUT = Path(__file__).parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    print(f"{'x':>9} {'pi(x)':>8} {'li(x)':>11} {'psi(x)':>12} "
          f"{'pi*ln(x)/x':>11} {'|pi-li|':>9} {'bound':>10}")
    for exp in (3, 4, 5, 6):
        x = 10**exp
        pi_x = count_primes(x)
        li_x = li(x)
        bound = math.sqrt(x) * math.log(x) ** 2
        print(f"{x:>9} {pi_x:>8} {li_x:>11.2f} {psi(x):>12.2f} "
              f"{pnt_ratio(x):>11.5f} {abs(pi_x - li_x):>9.2f} {bound:>10.0f}")

    hist = interval_histogram(10**6, 1000)
    print(f"\nnew primes per 1000-wide interval: first bucket {hist.counts[0]}, "
          f"last bucket {hist.counts[-1]}, total {hist.counts.sum()}")
    decades = hist.counts.reshape(10, 100).mean(axis=1)
    print("decade averages:", [round(float(d), 1) for d in decades])
    (OUT / "new_primes_histogram.svg").write_text(
        svg.histogram_figure(hist.starts, hist.counts, hist.bucket_width,
                             "new primes per 1000-wide interval, up to 1e6")
    )
    print(f"wrote {OUT}/new_primes_histogram.svg")


if __name__ == "__main__":
    main()
