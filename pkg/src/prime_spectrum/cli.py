"""Command line frontend: sieve | spectrum | spiral | reconstruct | stats.

Every command writes deterministic CSV/JSON tables (plus standalone SVG
figures) into --out. CSV files carry a provenance comment line recording the
command, window, mode and package version; JSON files mirror the CSV content.
Option precedence is flags > config file (--config, JSON) > built-in
defaults. The PRIME_SPECTRUM_MAX_N environment variable caps the window
length as a safety valve.

Exit codes: 0 success, 2 usage error, 3 capacity exceeded, 4 I/O failure.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import svg
from ._version import __version__
from .reconstruct import (
    DETECTION_THRESHOLD,
    reconstruct_eq13_strict,
    reconstruct_full,
    reconstruct_topk,
)
from .sieve import CapacityError, SeriesMode, Window, build_series, sieve_range
from .spectral import default_threshold, extract_peaks, fermat_spiral, spiral_trace
from .stats import dirichlet_partial_sums, interval_histogram, pnt_ratio, psi_comparison
from .transform import Spectrum, dft_fast

_DEFAULTS = {
    "start": 2,
    "mode": "indicator",
    "out": ".",
    "format": "csv,json,svg",
    "bucket_width": 1000,
    "top_k": "all",
    "all_bins": False,
    "strict_eq13": False,
}


class UsageError(Exception):
    """Invalid configuration; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    command: str
    window: Window
    mode: SeriesMode
    output_dir: Path
    formats: frozenset[str]
    threshold: float | None = None
    top_k: int | None = None  # None means all components
    bucket_width: int = 1000
    all_bins: bool = False
    strict_eq13: bool = False
    plot_range: tuple[int, int] | None = None
    from_spectrum: Path | None = None
    dirichlet_exponent: float | None = None


# ---------------------------------------------------------------------------
# serialization helpers


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return str(int(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _provenance(config: RunConfig) -> str:
    w = config.window
    return (
        f"command={config.command} window=[{w.start},{w.end}] "
        f"mode={config.mode.value} version={__version__}"
    )


def _write_table(config: RunConfig, name: str, header: list[str], rows) -> None:
    rows = [tuple(row) for row in rows]
    if "csv" in config.formats:
        lines = [f"# {_provenance(config)}", ",".join(header)]
        lines += [",".join(_cell(v) for v in row) for row in rows]
        path = config.output_dir / f"{name}.csv"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    if "json" in config.formats:
        doc = {
            "provenance": {
                "command": config.command,
                "window": {"start": config.window.start, "end": config.window.end},
                "mode": config.mode.value,
                "version": __version__,
            },
            "columns": header,
            "rows": [
                [bool(v) if isinstance(v, (bool, np.bool_)) else
                 int(v) if isinstance(v, (int, np.integer)) else
                 float(v) if isinstance(v, (float, np.floating)) else v
                 for v in row]
                for row in rows
            ],
        }
        path = config.output_dir / f"{name}.json"
        path.write_text(
            json.dumps(doc, indent=2) + "\n", encoding="utf-8", newline="\n"
        )


def _write_figure(config: RunConfig, name: str, document: str) -> None:
    if "svg" in config.formats:
        path = config.output_dir / f"{name}.svg"
        path.write_text(document, encoding="utf-8", newline="\n")


# ---------------------------------------------------------------------------
# spectrum CSV re-ingestion (reconstruct --from-spectrum)

_PROVENANCE_RE = re.compile(
    r"window=\[(\d+),(\d+)\]\s+mode=(\w+)"
)


def read_spectrum_csv(path: Path) -> Spectrum:
    """Rebuild a Spectrum from a spectrum.csv written by the spectrum command."""
    lines = path.read_text(encoding="utf-8").splitlines()
    meta = next((ln for ln in lines if ln.startswith("#")), None)
    if meta is None:
        raise UsageError(f"{path}: missing provenance comment line")
    m = _PROVENANCE_RE.search(meta)
    if m is None:
        raise UsageError(f"{path}: provenance line lacks window/mode metadata")
    window = Window(int(m.group(1)), int(m.group(2)))
    mode = SeriesMode(m.group(3))
    data = [ln for ln in lines if ln and not ln.startswith("#")]
    header = data[0].split(",")
    if header[:4] != ["bin", "nu", "re", "im"]:
        raise UsageError(f"{path}: unexpected spectrum header {header!r}")
    coeffs = np.empty(len(data) - 1, dtype=np.complex128)
    for row in data[1:]:
        parts = row.split(",")
        coeffs[int(parts[0])] = complex(float(parts[2]), float(parts[3]))
    if len(coeffs) != window.length:
        raise UsageError(
            f"{path}: {len(coeffs)} rows do not match window length {window.length}"
        )
    return Spectrum(coeffs, window, mode)


# ---------------------------------------------------------------------------
# command implementations


def _cmd_sieve(config: RunConfig) -> None:
    primes = sieve_range(config.window)
    series = build_series(config.window, config.mode)
    _write_table(config, "primes", ["prime"], ((int(p),) for p in primes))
    ns = config.window.integers()
    _write_table(
        config, "series", ["n", "value"],
        ((int(n), float(v)) for n, v in zip(ns, series.values)),
    )
    _write_figure(
        config, "series",
        svg.spike_figure(ns, series.values, f"series over [{config.window.start}, {config.window.end}]"),
    )


def _cmd_spectrum(config: RunConfig) -> None:
    spectrum = dft_fast(build_series(config.window, config.mode))
    rows = (
        (int(l), float(spectrum.freq_grid[l]),
         float(spectrum.coefficients[l].real), float(spectrum.coefficients[l].imag),
         float(spectrum.amplitudes[l]), float(spectrum.phases[l]))
        for l in range(spectrum.n_points)
    )
    _write_table(config, "spectrum", ["bin", "nu", "re", "im", "amplitude", "phase"], rows)
    _write_figure(
        config, "spectrum",
        svg.line_figure(
            [(spectrum.freq_grid[1:], spectrum.amplitudes[1:])],
            f"amplitude spectrum, window [{config.window.start}, {config.window.end}] (DC omitted)",
            "nu (cycles/sample)", "amplitude",
        ),
    )


def _cmd_spiral(config: RunConfig) -> None:
    spectrum = dft_fast(build_series(config.window, config.mode))
    threshold = config.threshold
    if threshold is None:
        threshold = default_threshold(spectrum)
    peaks = extract_peaks(spectrum, threshold)
    _write_table(
        config, "peaks", ["bin", "nu", "amplitude", "phase"],
        ((p.bin, p.frequency, p.amplitude, p.phase) for p in peaks.entries),
    )
    if config.all_bins:
        f = np.arange(1, spectrum.n_points // 2 + 1, dtype=np.float64)
        trace = fermat_spiral(f)
    else:
        trace = spiral_trace(peaks)
    _write_table(
        config, "spiral", ["t", "f", "x", "y"],
        ((t + 1, float(f), float(x), float(y))
         for t, (f, x, y) in enumerate(zip(trace.f, trace.x, trace.y))),
    )
    if len(trace) > 0:
        _write_figure(
            config, "spiral",
            svg.spiral_figure(trace.x, trace.y, "frequency spiral (r = a*f)"),
        )


def _cmd_reconstruct(config: RunConfig) -> None:
    if config.from_spectrum is not None:
        spectrum = read_spectrum_csv(config.from_spectrum)
    else:
        spectrum = dft_fast(build_series(config.window, config.mode))
    window = spectrum.source_window
    ns = window.integers()
    if config.strict_eq13:
        values = reconstruct_eq13_strict(spectrum, config.top_k)
        detected = window.start + np.flatnonzero(
            values >= DETECTION_THRESHOLD[spectrum.source_mode]
        )
    elif config.top_k is None:
        rec = reconstruct_full(spectrum)
        values, detected = rec.values, rec.detected_primes
    else:
        rec = reconstruct_topk(spectrum, config.top_k)
        values, detected = rec.values, rec.detected_primes
    is_detected = np.zeros(window.length, dtype=bool)
    is_detected[detected - window.start] = True
    _write_table(
        config, "reconstruction", ["n", "value", "is_detected_prime"],
        ((int(n), float(v), bool(d)) for n, v, d in zip(ns, values, is_detected)),
    )
    _write_figure(
        config, "reconstruction",
        svg.reconstruction_figure(
            ns, values, detected,
            f"reconstruction, window [{window.start}, {window.end}]",
            plot_range=config.plot_range,
        ),
    )


def _cmd_stats(config: RunConfig) -> None:
    x = config.window.end
    hist = interval_histogram(x, config.bucket_width)
    _write_table(
        config, "histogram", ["bucket_start", "count"],
        ((int(s), int(c)) for s, c in hist.buckets),
    )
    comp = psi_comparison(x)
    _write_table(
        config, "summary", ["x", "pi", "li", "psi", "pnt_ratio", "bound"],
        [(comp.x, comp.pi_x, comp.li, comp.psi, pnt_ratio(x), comp.bound)],
    )
    if config.dirichlet_exponent is not None:
        full, prime_part = dirichlet_partial_sums(config.dirichlet_exponent, x)
        _write_table(
            config, "dirichlet", ["a", "n_terms", "full_sum", "prime_sum"],
            [(config.dirichlet_exponent, x, full, prime_part)],
        )
    _write_figure(
        config, "histogram",
        svg.histogram_figure(
            hist.starts, hist.counts, hist.bucket_width,
            f"new primes per {hist.bucket_width}-wide interval up to {x}",
        ),
    )


_RUNNERS = {
    "sieve": _cmd_sieve,
    "spectrum": _cmd_spectrum,
    "spiral": _cmd_spiral,
    "reconstruct": _cmd_reconstruct,
    "stats": _cmd_stats,
}


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    cap = os.environ.get("PRIME_SPECTRUM_MAX_N")
    if cap is not None and config.window.length > int(cap):
        raise CapacityError(
            f"window length {config.window.length} exceeds PRIME_SPECTRUM_MAX_N={cap}"
        )
    config.output_dir.mkdir(parents=True, exist_ok=True)
    _RUNNERS[config.command](config)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--start", type=int, help="window start (integer >= 2; default 2)")
    common.add_argument("--end", type=int, help="window end, inclusive")
    common.add_argument("--mode", choices=["indicator", "log"],
                        help="series weights: prime indicator or log-weighted (default indicator)")
    common.add_argument("--out", help="output directory (default .)")
    common.add_argument("--format", help="comma-separated subset of csv,json,svg (default all)")
    common.add_argument("--config", help="JSON config file; flags take precedence over it")
    common.add_argument("--threshold", type=float,
                        help="peak amplitude threshold (default 0.25 * max non-DC amplitude)")
    common.add_argument("--top-k", dest="top_k",
                        help="number of spectral components for reconstruction, or 'all'")
    common.add_argument("--bucket-width", dest="bucket_width", type=int,
                        help="histogram bucket width (default 1000)")
    common.add_argument("--all-bins", dest="all_bins", action="store_true", default=None,
                        help="spiral over every half-spectrum bin instead of peaks only")
    common.add_argument("--strict-eq13", dest="strict_eq13", action="store_true", default=None,
                        help="experimental single-omega sine superposition (inspection only)")

    parser = argparse.ArgumentParser(
        prog="prime-spectrum",
        description="prime series, spectra, spirals, reconstruction and statistics",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("sieve", parents=[common], help="primes and series of a window")
    sub.add_parser("spectrum", parents=[common], help="DFT spectrum of a window's series")
    sub.add_parser("spiral", parents=[common], help="peak set and Fermat spiral trace")
    rec = sub.add_parser("reconstruct", parents=[common],
                         help="resynthesize the series and detect primes")
    rec.add_argument("--plot-range", dest="plot_range",
                     help="A:B x-range for the reconstruction figure")
    rec.add_argument("--from-spectrum", dest="from_spectrum",
                     help="re-ingest a spectrum.csv instead of recomputing")
    sub.add_parser("stats", parents=[common],
                   help="pi/psi/li summary and new-primes histogram").add_argument(
        "--dirichlet-exponent", dest="dirichlet_exponent", type=float,
        help="also emit partial sums of 1/n^a and of the prime-only sum (diagnostic)")
    return parser


def _merge_options(args: argparse.Namespace) -> dict:
    merged = dict(_DEFAULTS)
    if getattr(args, "config", None):
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise UsageError(f"config file not found: {args.config}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"config file {args.config} is not valid JSON: {exc}")
        if not isinstance(loaded, dict):
            raise UsageError(f"config file {args.config} must hold a JSON object")
        merged.update(loaded)
    for key, value in vars(args).items():
        if key not in ("command", "config") and value is not None:
            merged[key] = value
    return merged


def _parse_plot_range(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    m = re.fullmatch(r"(\d+):(\d+)", str(text))
    if m is None:
        raise UsageError(f"--plot-range expects A:B with integers, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if hi < lo:
        raise UsageError(f"--plot-range upper bound below lower bound: {text!r}")
    return lo, hi


def build_config(args: argparse.Namespace) -> RunConfig:
    opts = _merge_options(args)
    command = args.command

    from_spectrum = opts.get("from_spectrum")
    if command == "reconstruct" and from_spectrum is not None:
        window = read_spectrum_csv(Path(from_spectrum)).source_window
    else:
        if opts.get("end") is None:
            raise UsageError(f"{command} requires --end (inclusive window end)")
        try:
            window = Window(int(opts["start"]), int(opts["end"]))
        except ValueError as exc:
            raise UsageError(str(exc))

    mode_text = str(opts["mode"])
    if mode_text not in ("indicator", "log"):
        raise UsageError(f"--mode must be 'indicator' or 'log', got {mode_text!r}")

    fmt = opts["format"]
    if isinstance(fmt, (list, tuple)):
        formats = frozenset(str(f) for f in fmt)
    else:
        formats = frozenset(f for f in str(fmt).split(",") if f)
    unknown = formats - {"csv", "json", "svg"}
    if unknown or not formats:
        raise UsageError(f"--format must be a nonempty subset of csv,json,svg, got {opts['format']!r}")

    top_k_raw = opts.get("top_k", "all")
    if top_k_raw in ("all", None):
        top_k = None
    else:
        try:
            top_k = int(top_k_raw)
        except (TypeError, ValueError):
            raise UsageError(f"--top-k must be an integer or 'all', got {top_k_raw!r}")

    threshold = opts.get("threshold")
    if threshold is not None and not float(threshold) > 0:
        raise UsageError(f"--threshold must be positive, got {threshold}")

    bucket_width = int(opts["bucket_width"])
    if bucket_width < 1:
        raise UsageError(f"--bucket-width must be >= 1, got {bucket_width}")

    return RunConfig(
        command=command,
        window=window,
        mode=SeriesMode.INDICATOR if mode_text == "indicator" else SeriesMode.LOG_WEIGHTED,
        output_dir=Path(str(opts["out"])),
        formats=formats,
        threshold=None if threshold is None else float(threshold),
        top_k=top_k,
        bucket_width=bucket_width,
        all_bins=bool(opts["all_bins"]),
        strict_eq13=bool(opts["strict_eq13"]),
        plot_range=_parse_plot_range(opts.get("plot_range")),
        from_spectrum=None if from_spectrum is None else Path(from_spectrum),
        dirichlet_exponent=opts.get("dirichlet_exponent"),
    )


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
        return run(config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
