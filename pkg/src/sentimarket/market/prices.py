"""Daily OHLC series: parsing, validation, CSV round-trip."""
from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from datetime import date, timedelta
from typing import Iterable, TextIO

from ..errors import DataError
from ..timefmt import parse_date

OBSERVED = "observed"
INTERPOLATED = "interpolated"
DENOISED = "denoised"
_PROVENANCE = (OBSERVED, INTERPOLATED, DENOISED)

_COLUMNS = ("date", "open", "high", "low", "close", "volume")


@dataclass(frozen=True)
class PriceSeries:
    """Dated OHLCV rows with a per-row provenance flag.

    Dates are strictly increasing; a freshly parsed series keeps only
    trading days (weekend gaps) while fill_calendar output is contiguous
    by calendar day.
    """

    date: tuple[date, ...]
    open: tuple[float, ...]
    high: tuple[float, ...]
    low: tuple[float, ...]
    close: tuple[float, ...]
    volume: tuple[float, ...]
    provenance: tuple[str, ...]

    def __post_init__(self):
        n = len(self.date)
        if n == 0:
            raise DataError("empty price series")
        for name in ("open", "high", "low", "close", "volume", "provenance"):
            if len(getattr(self, name)) != n:
                raise DataError(f"column {name} length differs from date column")
        for prev, cur in zip(self.date, self.date[1:]):
            if cur <= prev:
                raise DataError(f"dates not strictly increasing at {cur.isoformat()}")
        for flag in self.provenance:
            if flag not in _PROVENANCE:
                raise DataError(f"unknown provenance flag {flag!r}")
        for i in range(n):
            if self.provenance[i] != OBSERVED:
                continue
            o, h, l, c, v = (
                self.open[i], self.high[i], self.low[i], self.close[i], self.volume[i]
            )
            day = self.date[i].isoformat()
            if min(o, h, l, c) <= 0.0:
                raise DataError(f"nonpositive price on row {day}")
            if not (l <= min(o, c) and max(o, c) <= h):
                raise DataError(f"OHLC ordering violated on row {day}")
            if v < 0.0:
                raise DataError(f"negative volume on row {day}")

    def __len__(self) -> int:
        return len(self.date)

    def is_contiguous(self) -> bool:
        one = timedelta(days=1)
        return all(b - a == one for a, b in zip(self.date, self.date[1:]))

    def with_close(self, close: Iterable[float], provenance: str) -> "PriceSeries":
        values = tuple(float(v) for v in close)
        return replace(self, close=values, provenance=(provenance,) * len(self.date))


def parse_ohlc_rows(fh: TextIO, source: str = "<stream>") -> PriceSeries:
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        raise DataError(f"{source}: empty file") from None
    header = [h.strip().lower() for h in header]
    if tuple(header[:6]) != _COLUMNS:
        raise DataError(
            f"{source}: header must start with {','.join(_COLUMNS)}"
        )
    has_provenance = len(header) > 6 and header[6] == "provenance"

    rows = []
    for row in reader:
        if not row:
            continue
        where = f"{source} line {reader.line_num}"
        if len(row) < 6:
            raise DataError(f"{where}: expected at least 6 columns")
        try:
            day = parse_date(row[0])
            numbers = [float(cell) for cell in row[1:6]]
        except DataError as exc:
            raise DataError(f"{where}: {exc}") from None
        except ValueError as exc:
            raise DataError(f"{where}: {exc}") from None
        flag = row[6].strip() if has_provenance and len(row) > 6 else OBSERVED
        rows.append((day, *numbers, flag))

    if not rows:
        raise DataError(f"{source}: no data rows")
    rows.sort(key=lambda r: r[0])
    for (a, *_), (b, *_) in zip(rows, rows[1:]):
        if a == b:
            raise DataError(f"{source}: duplicate date {a.isoformat()}")
    return PriceSeries(
        date=tuple(r[0] for r in rows),
        open=tuple(r[1] for r in rows),
        high=tuple(r[2] for r in rows),
        low=tuple(r[3] for r in rows),
        close=tuple(r[4] for r in rows),
        volume=tuple(r[5] for r in rows),
        provenance=tuple(r[6] for r in rows),
    )


def parse_ohlc(path) -> PriceSeries:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return parse_ohlc_rows(fh, source=str(path))
    except UnicodeDecodeError:
        raise DataError(f"{path}: not valid UTF-8") from None


def write_ohlc_csv(series: PriceSeries, fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(_COLUMNS + ("provenance",))
    for i in range(len(series)):
        writer.writerow(
            [
                series.date[i].isoformat(),
                repr(series.open[i]),
                repr(series.high[i]),
                repr(series.low[i]),
                repr(series.close[i]),
                repr(series.volume[i]),
                series.provenance[i],
            ]
        )


def ohlc_csv_text(series: PriceSeries) -> str:
    import io

    buf = io.StringIO()
    write_ohlc_csv(series, buf)
    return buf.getvalue()
