"""Periodized orthogonal discrete wavelet transform with coif3 filters.

The 18-tap coif3 analysis filters are embedded as constants; the
highpass filter is derived by the quadrature-mirror relation
g[k] = (-1)^k h[L-1-k]. Periodic boundary extension keeps the per-level
analysis map orthogonal, so the inverse is its transpose and the
round-trip is exact to float precision. Odd-length levels are padded by
replicating the final sample; true lengths are recorded per level and
restored on inversion.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..errors import DataError

_COIF3_DEC_LO = np.array(
    [
        -3.459977283621256e-05,
        -7.098330313814125e-05,
        0.0004662169601128863,
        0.0011175187708906016,
        -0.0025745176887502236,
        -0.00900797613666158,
        0.015880544863615904,
        0.03455502757306163,
        -0.08230192710688598,
        -0.07179982161931202,
        0.42848347637761874,
        0.7937772226256206,
        0.4051769024096169,
        -0.06112339000267287,
        -0.0657719112818555,
        0.023452696141836267,
        0.007782596427325418,
        -0.003793512864491014,
    ]
)
_TAPS = len(_COIF3_DEC_LO)
_COIF3_DEC_HI = np.array(
    [(-1.0) ** k * _COIF3_DEC_LO[_TAPS - 1 - k] for k in range(_TAPS)]
)

WAVELET_NAME = "coif3"

# sanity of the embedded constants: unit energy and lowpass DC gain sqrt(2)
if abs(float(_COIF3_DEC_LO @ _COIF3_DEC_LO) - 1.0) > 1e-10:
    raise RuntimeError("coif3 filter constants fail the unit-energy check")
if abs(float(_COIF3_DEC_LO.sum()) - math.sqrt(2.0)) > 1e-10:
    raise RuntimeError("coif3 filter constants fail the DC-gain check")


@dataclass(frozen=True)
class WaveletPyramid:
    """Coefficients of a multi-level DWT; details ordered finest first."""

    approx: np.ndarray
    details: tuple[np.ndarray, ...]
    lengths: tuple[int, ...]
    wavelet_name: str = WAVELET_NAME

    def __post_init__(self):
        if len(self.details) != len(self.lengths):
            raise DataError("detail levels and recorded lengths differ in count")
        if not self.details:
            raise DataError("pyramid has no detail levels")
        expected = None
        for d, true_len in zip(self.details, self.lengths):
            padded = true_len + (true_len % 2)
            if len(d) != padded // 2:
                raise DataError(
                    f"detail length {len(d)} inconsistent with signal length {true_len}"
                )
            if expected is not None and true_len != expected:
                raise DataError("level lengths do not chain")
            expected = padded // 2
        if len(self.approx) != expected:
            raise DataError("approximation length inconsistent with pyramid")

    @property
    def levels(self) -> int:
        return len(self.details)


def _analyze_one(x: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    true_len = len(x)
    if true_len % 2:
        x = np.concatenate([x, x[-1:]])
    n = len(x)
    idx = (2 * np.arange(n // 2)[:, None] + np.arange(_TAPS)[None, :]) % n
    windows = x[idx]
    return windows @ _COIF3_DEC_LO, windows @ _COIF3_DEC_HI, true_len


def _synthesize_one(approx: np.ndarray, detail: np.ndarray, true_len: int) -> np.ndarray:
    n = 2 * len(approx)
    idx = (2 * np.arange(len(approx))[:, None] + np.arange(_TAPS)[None, :]) % n
    x = np.zeros(n)
    np.add.at(x, idx, np.outer(approx, _COIF3_DEC_LO) + np.outer(detail, _COIF3_DEC_HI))
    return x[:true_len]


def wavelet_forward(values, levels: int) -> WaveletPyramid:
    """Decompose into `levels` detail bands plus a final approximation."""
    if levels < 1:
        raise DataError(f"levels must be at least 1, got {levels}")
    x = np.asarray(values, dtype=float)
    if x.ndim != 1:
        raise DataError("wavelet input must be one-dimensional")
    if len(x) < 2**levels:
        raise DataError(
            f"series too short: length {len(x)} < 2^{levels} for {levels} levels"
        )
    if not np.all(np.isfinite(x)):
        raise DataError("wavelet input contains non-finite values")
    details = []
    lengths = []
    for _ in range(levels):
        x, d, true_len = _analyze_one(x)
        details.append(d)
        lengths.append(true_len)
    return WaveletPyramid(approx=x, details=tuple(details), lengths=tuple(lengths))


def wavelet_inverse(pyramid: WaveletPyramid) -> np.ndarray:
    x = pyramid.approx
    for detail, true_len in zip(reversed(pyramid.details), reversed(pyramid.lengths)):
        x = _synthesize_one(x, detail, true_len)
    return x


def wavelet_transform(values=None, levels: int = 3, inverse: bool = False, coefficients: WaveletPyramid | None = None):
    """Combined entry point: forward on values, or inverse on coefficients."""
    if inverse:
        if coefficients is None:
            raise DataError("inverse transform requires coefficients")
        return wavelet_inverse(coefficients)
    if values is None:
        raise DataError("forward transform requires values")
    return wavelet_forward(values, levels)
