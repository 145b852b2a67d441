"""Segmented prime sieving and construction of prime-indicator / von Mangoldt series.

The central object is a sampled series over an inclusive integer window
[start, end] with unit sampling step:

* indicator mode: value 1.0 exactly at primes, 0.0 elsewhere;
* log-weighted mode: the classical von Mangoldt weights, log(p) at every
  prime power p**k inside the window, 0.0 elsewhere.

Sieving is segmented, so windows with large offsets (start around 1e7 and
beyond) only need memory proportional to the window length plus the base
primes up to sqrt(end).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

import numpy as np

#: Practical upper bound on window ends; anything above raises CapacityError.
DEFAULT_MAX_END = 2**63 - 1

#: Default segment size (entries per block), sized for cache friendliness.
DEFAULT_BLOCK_SIZE = 1 << 16


class CapacityError(Exception):
    """A requested window exceeds the configured sieve capacity."""


class SeriesMode(Enum):
    """How the series weights prime locations."""

    INDICATOR = "indicator"
    LOG_WEIGHTED = "log"


@dataclass(frozen=True)
class Window:
    """Inclusive integer window [start, end] with start >= 2."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if self.start < 2:
            raise ValueError(f"window start must be >= 2, got {self.start}")
        if self.end < self.start:
            raise ValueError(
                f"window end must be >= start, got [{self.start}, {self.end}]"
            )

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def integers(self) -> np.ndarray:
        return np.arange(self.start, self.end + 1, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class MangoldtSeries:
    """Real-valued series sampled at every integer of a window.

    Instances produced by :func:`build_series` satisfy the mode's defining
    property; the dataclass itself does not re-validate values, so tests and
    transforms may also carry arbitrary real payloads (impulses, random 0/1
    sequences) through the same type.
    """

    window: Window
    mode: SeriesMode
    values: np.ndarray
    delta: int = 1  # sampling period in integer steps; fixed to 1

    def __post_init__(self) -> None:
        if len(self.values) != self.window.length:
            raise ValueError(
                f"values length {len(self.values)} does not match window "
                f"length {self.window.length}"
            )

    @property
    def n_points(self) -> int:
        return self.window.length


def _base_primes(limit: int) -> np.ndarray:
    """All primes <= limit via a plain boolean sieve (limit is small: sqrt(end))."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.flatnonzero(mask).astype(np.int64)


def _segment_masks(
    window: Window, block_size: int = DEFAULT_BLOCK_SIZE
) -> Iterator[tuple[int, np.ndarray]]:
    """Yield (block_start, primality_mask) blocks covering the window in order.

    mask[i] is True iff block_start + i is prime. Deterministic regardless of
    block size.
    """
    base = _base_primes(math.isqrt(window.end))
    for lo in range(window.start, window.end + 1, block_size):
        hi = min(lo + block_size, window.end + 1)
        mask = np.ones(hi - lo, dtype=bool)
        for p in base:
            p = int(p)
            first = max(p * p, ((lo + p - 1) // p) * p)
            if first < hi:
                mask[first - lo :: p] = False
        yield lo, mask


def _check_capacity(window: Window, max_end: int) -> None:
    if window.end > max_end:
        raise CapacityError(
            f"window end {window.end} exceeds configured maximum {max_end}"
        )


def sieve_range(
    window: Window,
    max_end: int = DEFAULT_MAX_END,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> np.ndarray:
    """All primes p with window.start <= p <= window.end, ascending.

    Memory stays proportional to block_size plus the count of base primes up
    to sqrt(end), so large-offset windows are cheap.
    """
    _check_capacity(window, max_end)
    chunks = [
        lo + np.flatnonzero(mask)
        for lo, mask in _segment_masks(window, block_size)
    ]
    return np.concatenate(chunks).astype(np.int64)


def count_primes(x: int, max_end: int = DEFAULT_MAX_END) -> int:
    """Prime counting function pi(x): number of primes <= x, for x >= 2."""
    if x < 2:
        raise ValueError(f"count_primes requires x >= 2, got {x}")
    window = Window(2, x)
    _check_capacity(window, max_end)
    return int(sum(int(mask.sum()) for _, mask in _segment_masks(window)))


def build_series(
    window: Window,
    mode: SeriesMode = SeriesMode.INDICATOR,
    max_end: int = DEFAULT_MAX_END,
) -> MangoldtSeries:
    """Materialize the series of the given mode over the window.

    Indicator mode writes 1.0 (= log of e) at primes. Log-weighted mode writes
    log(p) at every prime power p**k in the window; bases of the k >= 2 powers
    never exceed sqrt(end), so they come from the base-prime sieve.
    """
    _check_capacity(window, max_end)
    values = np.zeros(window.length, dtype=np.float64)
    primes = sieve_range(window, max_end=max_end)
    if mode is SeriesMode.INDICATOR:
        values[primes - window.start] = 1.0
    elif mode is SeriesMode.LOG_WEIGHTED:
        values[primes - window.start] = np.log(primes)
        for p in _base_primes(math.isqrt(window.end)):
            p = int(p)
            power = p * p
            while power <= window.end:
                if power >= window.start:
                    values[power - window.start] = math.log(p)
                power *= p
    else:  # pragma: no cover - enum is closed
        raise ValueError(f"unknown series mode {mode!r}")
    return MangoldtSeries(window=window, mode=mode, values=values)
