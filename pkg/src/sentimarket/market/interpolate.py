"""Calendar-gap filling with local Lagrange interpolation.

Each missing calendar day is filled, per column, by the cubic Lagrange
polynomial through the nearest four observed days (two on each side
where available, shifted at the boundaries) evaluated at the missing
day's ordinal. A local stencil avoids the oscillation a single global
polynomial would develop over months of data.
"""
from __future__ import annotations

from bisect import bisect_left
from datetime import timedelta

from ..errors import DataError
from .prices import INTERPOLATED, PriceSeries

_STENCIL = 4


def _lagrange_eval(xs: list[float], ys: list[float], x: float) -> float:
    total = 0.0
    for j in range(len(xs)):
        term = ys[j]
        for m in range(len(xs)):
            if m != j:
                term *= (x - xs[m]) / (xs[j] - xs[m])
        total += term
    return total


def _stencil_indices(ordinals: list[int], x: int) -> range:
    """Nearest 4 node positions around x: 2 below, 2 above, shifted at ends."""
    pos = bisect_left(ordinals, x)
    lo = max(0, min(pos - 2, len(ordinals) - _STENCIL))
    return range(lo, lo + _STENCIL)


def fill_calendar(series: PriceSeries) -> PriceSeries:
    """Fill every missing calendar day between the first and last date."""
    if len(series) < _STENCIL:
        raise DataError(
            f"insufficient nodes: need at least {_STENCIL} observed rows, got {len(series)}"
        )
    ordinals = [d.toordinal() for d in series.date]
    columns = {
        name: list(getattr(series, name))
        for name in ("open", "high", "low", "close", "volume")
    }

    out_dates = []
    out_columns: dict[str, list[float]] = {name: [] for name in columns}
    out_provenance = []
    by_ordinal = {o: i for i, o in enumerate(ordinals)}

    day = series.date[0]
    one = timedelta(days=1)
    while day <= series.date[-1]:
        ordinal = day.toordinal()
        out_dates.append(day)
        if ordinal in by_ordinal:
            i = by_ordinal[ordinal]
            for name in columns:
                out_columns[name].append(columns[name][i])
            out_provenance.append(series.provenance[i])
        else:
            stencil = _stencil_indices(ordinals, ordinal)
            xs = [float(ordinals[k]) for k in stencil]
            for name in columns:
                ys = [columns[name][k] for k in stencil]
                value = _lagrange_eval(xs, ys, float(ordinal))
                if name == "volume" and value < 0.0:
                    value = 0.0
                out_columns[name].append(value)
            out_provenance.append(INTERPOLATED)
        day += one

    return PriceSeries(
        date=tuple(out_dates),
        open=tuple(out_columns["open"]),
        high=tuple(out_columns["high"]),
        low=tuple(out_columns["low"]),
        close=tuple(out_columns["close"]),
        volume=tuple(out_columns["volume"]),
        provenance=tuple(out_provenance),
    )
