import math

import numpy as np
import pytest

from prime_spectrum import (
    count_primes,
    dirichlet_partial_sums,
    interval_histogram,
    li,
    pnt_ratio,
    psi,
    psi_comparison,
    theta,
)
from oracles import midpoint_li, trial_prime_count


def test_li_at_lower_bound_is_zero():
    assert li(2) == 0.0
    with pytest.raises(ValueError):
        li(1.5)


@pytest.mark.parametrize("x", [3, 10, 100, 1234.5, 10_000])
def test_li_matches_midpoint_oracle(x):
    assert li(x) == pytest.approx(midpoint_li(x), abs=1e-6)


def test_li_tracks_prime_count_within_classical_bound():
    x = 10_000
    assert abs(li(x) - count_primes(x)) < math.sqrt(x) * math.log(x) ** 2


def test_psi_values():
    assert psi(2) == pytest.approx(math.log(2), abs=1e-15)
    # prime powers up to 10: 2, 4, 8 -> 3 log 2; 3, 9 -> 2 log 3; 5; 7
    expected = 3 * math.log(2) + 2 * math.log(3) + math.log(5) + math.log(7)
    assert psi(10) == pytest.approx(expected, abs=1e-12)
    assert abs(psi(10**6) / 10**6 - 1) < 0.01
    with pytest.raises(ValueError):
        psi(1)


def test_theta_below_psi():
    for x in (10, 100, 10_000):
        assert theta(x) <= psi(x)
    assert theta(10) == pytest.approx(sum(math.log(p) for p in (2, 3, 5, 7)), abs=1e-12)


def test_pnt_ratio():
    assert pnt_ratio(1000) == pytest.approx(168 * math.log(1000) / 1000)
    assert pnt_ratio(3) == pytest.approx(2 * math.log(3) / 3)
    assert 1.0 < pnt_ratio(10**6) < 1.1
    with pytest.raises(ValueError):
        pnt_ratio(2)


def test_histogram_buckets():
    hist = interval_histogram(10_000, 1000)
    assert hist.bucket_width == 1000
    assert hist.counts[0] == 168
    assert hist.counts[9] == count_primes(9999) - count_primes(8999)
    assert hist.starts.tolist() == list(range(0, 10_000, 1000))


def test_histogram_width_one():
    hist = interval_histogram(10, 1)
    assert hist.counts[7] == 1  # 7 is prime
    assert hist.counts[8] == 0
    assert hist.buckets[2] == (2, 1)


def test_histogram_counts_sum_to_pi():
    for x_max, width in ((10_000, 1000), (5000, 7), (97, 10)):
        hist = interval_histogram(x_max, width)
        covered_end = (x_max // width) * width - 1
        expected = trial_prime_count(covered_end) if covered_end >= 2 else 0
        assert int(hist.counts.sum()) == expected


def test_histogram_validation():
    with pytest.raises(ValueError):
        interval_histogram(100, 0)
    with pytest.raises(ValueError):
        interval_histogram(5, 10)


def test_histogram_trend_decreases_at_decade_level():
    # counts fluctuate bucket to bucket, but 100-bucket decade averages over
    # [0, 1e6) decrease monotonically
    counts = interval_histogram(10**6, 1000).counts
    decades = counts.reshape(10, 100).mean(axis=1)
    assert np.all(np.diff(decades) < 0)


def test_psi_comparison_bundle():
    comp = psi_comparison(10_000)
    assert comp.x == 10_000
    assert comp.pi_x == 1229
    assert comp.psi == pytest.approx(psi(10_000))
    assert comp.li == pytest.approx(li(10_000))
    assert comp.bound == pytest.approx(math.sqrt(10_000) * math.log(10_000) ** 2)
    assert abs(comp.pi_x - comp.li) < comp.bound


def test_dirichlet_partial_sums_diagnostic():
    full, prime_part = dirichlet_partial_sums(2.0, 1000)
    assert prime_part < full
    assert full == pytest.approx(float(np.sum(1.0 / np.arange(1, 1001) ** 2)), rel=1e-12)
    with pytest.raises(ValueError):
        dirichlet_partial_sums(1.0, 100)
    with pytest.raises(ValueError):
        dirichlet_partial_sums(2.0, 1)
