import numpy as np
import pytest

from prime_spectrum import (
    MangoldtSeries,
    SeriesMode,
    Window,
    build_series,
    check_periodicity,
    count_primes,
    dft_fast,
    dft_naive,
    inverse_dft,
)
from oracles import naive_inverse


def series_of(values, start=2):
    values = np.asarray(values, dtype=np.float64)
    window = Window(start, start + len(values) - 1)
    return MangoldtSeries(window, SeriesMode.INDICATOR, values)


def test_dc_bin_is_series_sum():
    spectrum = dft_naive(build_series(Window(2, 5)))
    assert spectrum.coefficients[0] == pytest.approx(3.0, abs=1e-12)
    assert spectrum.coefficients[0].imag == pytest.approx(0.0, abs=1e-12)


def test_zero_series_transforms_to_zero():
    spectrum = dft_naive(build_series(Window(24, 26)))
    assert np.abs(spectrum.coefficients).max() == pytest.approx(0.0, abs=1e-12)


def test_conjugate_symmetry_small():
    spectrum = dft_naive(build_series(Window(2, 10)))
    amps = spectrum.amplitudes
    for l in range(1, 9):
        assert amps[l] == pytest.approx(amps[9 - l], abs=1e-12)


def test_impulse_has_flat_amplitude():
    spectrum = dft_fast(build_series(Window(23, 26)))  # [1, 0, 0, 0]
    assert spectrum.amplitudes == pytest.approx(np.ones(4), abs=1e-12)


def test_naive_cap_refusal_points_to_fast_path():
    long_series = series_of(np.zeros((1 << 14) + 1))
    with pytest.raises(ValueError, match="dft_fast"):
        dft_naive(long_series)


def test_minimum_length():
    with pytest.raises(ValueError):
        dft_naive(series_of([1.0]))
    with pytest.raises(ValueError):
        dft_fast(series_of([1.0]))


@pytest.mark.parametrize("n", [17, 64, 257, 1000])
def test_fast_matches_naive(n):
    # includes prime n, which exercises the non-power-of-two path
    rng = np.random.default_rng(n)
    series = series_of(rng.integers(0, 2, size=n).astype(float))
    delta = np.abs(dft_fast(series).coefficients - dft_naive(series).coefficients)
    assert delta.max() < 1e-6 * n


def test_fast_dc_at_figure_scale():
    spectrum = dft_fast(build_series(Window(2, 10001)))
    assert spectrum.coefficients[0].real == pytest.approx(count_primes(10001))
    assert spectrum.coefficients[0].real == pytest.approx(1229.0)


@pytest.mark.parametrize("n", [16, 97, 1000, 8192])
def test_inversion_round_trip(n):
    rng = np.random.default_rng(n + 1)
    series = series_of(rng.integers(0, 2, size=n).astype(float))
    restored = inverse_dft(dft_fast(series))
    assert np.abs(restored - series.values).max() < 1e-9


def test_inverse_matches_direct_sum_and_small_imag_residue():
    series = build_series(Window(2, 101))
    spectrum = dft_fast(series)
    direct = naive_inverse(spectrum.coefficients)
    assert np.abs(direct.imag).max() < 1e-9
    assert inverse_dft(spectrum) == pytest.approx(direct.real, abs=1e-9)
    assert inverse_dft(spectrum) == pytest.approx(series.values, abs=1e-9)


def test_inverse_of_zero_spectrum():
    spectrum = dft_fast(build_series(Window(24, 26)))
    assert inverse_dft(spectrum) == pytest.approx(np.zeros(3), abs=1e-15)


def test_parseval():
    rng = np.random.default_rng(99)
    for n in (64, 301, 1024):
        series = series_of(rng.integers(0, 2, size=n).astype(float))
        spectrum = dft_fast(series)
        lhs = np.sum(series.values**2)
        rhs = np.sum(spectrum.amplitudes**2) / n
        assert rhs == pytest.approx(lhs, rel=1e-9)


def test_linearity():
    rng = np.random.default_rng(5)
    n = 128
    s1 = rng.integers(0, 2, size=n).astype(float)
    s2 = rng.integers(0, 2, size=n).astype(float)
    a, b = 1.75, -0.5
    combined = dft_fast(series_of(a * s1 + b * s2)).coefficients
    separate = a * dft_fast(series_of(s1)).coefficients + b * dft_fast(series_of(s2)).coefficients
    assert np.abs(combined - separate).max() < 1e-9


def test_frequency_grid_and_phase_range():
    spectrum = dft_fast(build_series(Window(2, 101)))
    n = spectrum.n_points
    assert spectrum.freq_grid == pytest.approx(np.arange(n) / n)
    assert np.all(spectrum.phases > -np.pi)
    assert np.all(spectrum.phases <= np.pi)
    assert spectrum.amplitudes == pytest.approx(np.abs(spectrum.coefficients))


def test_phase_of_negative_real_coefficient_is_pi():
    # Nyquist coefficient of [0, 1, 0, 1] is -2; its argument must be +pi
    spectrum = dft_fast(series_of([0.0, 1.0, 0.0, 1.0]))
    assert spectrum.coefficients[2].real == pytest.approx(-2.0, abs=1e-12)
    assert spectrum.phases[2] == pytest.approx(np.pi)


def test_periodicity_examples():
    s4 = series_of([1.0, 1.0, 0.0, 1.0])
    assert check_periodicity(s4, z=1, l=3) < 1e-9
    assert check_periodicity(s4, z=5, l=0) < 1e-9
    assert check_periodicity(build_series(Window(2, 101)), z=2, l=50) < 1e-9


def test_periodicity_randomized():
    rng = np.random.default_rng(314)
    series = build_series(Window(2, 998))  # prime-length series, N = 997
    n = series.n_points
    for _ in range(25):
        z = int(rng.integers(1, 6))
        l = int(rng.integers(0, n))
        assert check_periodicity(series, z=z, l=l) < 1e-9


def test_periodicity_argument_validation():
    series = series_of([1.0, 0.0, 1.0])
    with pytest.raises(ValueError):
        check_periodicity(series, z=0, l=1)
    with pytest.raises(ValueError):
        check_periodicity(series, z=1, l=3)
