"""OHLC ingestion, calendar filling, and wavelet denoising."""

from .denoise import DenoiseReport, denoise, denoise_values, rmse, snr_db, soft_threshold
from .interpolate import fill_calendar
from .prices import (
    DENOISED,
    INTERPOLATED,
    OBSERVED,
    PriceSeries,
    ohlc_csv_text,
    parse_ohlc,
    parse_ohlc_rows,
    write_ohlc_csv,
)
from .wavelet import (
    WAVELET_NAME,
    WaveletPyramid,
    wavelet_forward,
    wavelet_inverse,
    wavelet_transform,
)

__all__ = [
    "PriceSeries",
    "OBSERVED",
    "INTERPOLATED",
    "DENOISED",
    "parse_ohlc",
    "parse_ohlc_rows",
    "write_ohlc_csv",
    "ohlc_csv_text",
    "fill_calendar",
    "WaveletPyramid",
    "WAVELET_NAME",
    "wavelet_forward",
    "wavelet_inverse",
    "wavelet_transform",
    "denoise",
    "denoise_values",
    "soft_threshold",
    "DenoiseReport",
    "rmse",
    "snr_db",
]
