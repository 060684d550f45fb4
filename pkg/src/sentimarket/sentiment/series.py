"""Bucketed sentiment series: aggregation, gap interpolation, centering."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, replace
from datetime import date, datetime, timedelta, timezone
from typing import Iterable, Sequence, TextIO

import numpy as np

from ..errors import DataError
from ..timefmt import format_utc, parse_utc

BUCKET_30MIN = timedelta(minutes=30)
BUCKET_DAILY = timedelta(days=1)
_ALLOWED_BUCKETS = (BUCKET_30MIN, BUCKET_DAILY)


@dataclass(frozen=True)
class SentimentSeries:
    bucket_start: tuple[datetime, ...]
    score: tuple[float, ...]
    count: tuple[int, ...]
    bucket: timedelta
    centered: bool = False
    mean_before_centering: float = 0.0

    def __post_init__(self):
        if not (len(self.bucket_start) == len(self.score) == len(self.count)):
            raise DataError("bucket_start, score, count must have equal length")
        if not self.bucket_start:
            raise DataError("empty sentiment series")
        if self.bucket not in _ALLOWED_BUCKETS:
            raise DataError(f"bucket must be 30 minutes or 1 day, got {self.bucket}")
        for prev, cur in zip(self.bucket_start, self.bucket_start[1:]):
            if cur - prev != self.bucket:
                raise DataError(f"non-uniform bucket spacing at {format_utc(cur)}")
        if not self.centered:
            for value in self.score:
                if not -1.0 <= value <= 1.0:
                    raise DataError(f"raw score out of [-1,1]: {value}")

    def daily_scores(self) -> dict[date, float]:
        """Date-indexed view; requires daily buckets."""
        if self.bucket != BUCKET_DAILY:
            raise DataError("daily_scores requires a daily-bucket series")
        return {ts.date(): s for ts, s in zip(self.bucket_start, self.score)}


def _floor_to_bucket(instant: datetime, bucket: timedelta) -> datetime:
    utc = instant.astimezone(timezone.utc)
    if bucket == BUCKET_DAILY:
        return utc.replace(hour=0, minute=0, second=0, microsecond=0)
    return utc.replace(minute=utc.minute - utc.minute % 30, second=0, microsecond=0)


def _fill_gaps(values: list[float | None]) -> list[float]:
    """Linear interpolation across None runs; nearest-value extension at ends."""
    known = [i for i, v in enumerate(values) if v is not None]
    if not known:
        raise DataError("no scored tweets")
    filled: list[float] = []
    for i, value in enumerate(values):
        if value is not None:
            filled.append(value)
            continue
        left = max((k for k in known if k < i), default=None)
        right = min((k for k in known if k > i), default=None)
        if left is None:
            filled.append(values[right])  # type: ignore[arg-type]
        elif right is None:
            filled.append(values[left])  # type: ignore[arg-type]
        else:
            frac = (i - left) / (right - left)
            filled.append(values[left] * (1 - frac) + values[right] * frac)
    return filled


def aggregate(
    scored: Sequence[tuple[datetime, float]], bucket: timedelta
) -> SentimentSeries:
    """Mean score per bucket over [start, start+bucket); empty interior
    buckets are linearly interpolated and carry count 0."""
    if bucket not in _ALLOWED_BUCKETS:
        raise DataError(f"bucket must be 30 minutes or 1 day, got {bucket}")
    if not scored:
        raise DataError("no scored tweets")
    ordered = sorted(scored, key=lambda pair: pair[0])
    start = _floor_to_bucket(ordered[0][0], bucket)
    end = _floor_to_bucket(ordered[-1][0], bucket)
    n = int((end - start) / bucket) + 1

    sums = [0.0] * n
    counts = [0] * n
    for instant, value in ordered:
        index = int((_floor_to_bucket(instant, bucket) - start) / bucket)
        sums[index] += value
        counts[index] += 1
    means = [s / c if c else None for s, c in zip(sums, counts)]
    return SentimentSeries(
        bucket_start=tuple(start + i * bucket for i in range(n)),
        score=tuple(_fill_gaps(means)),
        count=tuple(counts),
        bucket=bucket,
    )


def center(series: SentimentSeries) -> SentimentSeries:
    """Subtract the full-sample mean; second pass removes rounding residue."""
    if series.centered:
        raise DataError("series is already centered")
    values = np.asarray(series.score, dtype=np.float64)
    first = float(np.mean(values))
    shifted = values - first
    residue = float(np.mean(shifted))
    return replace(
        series,
        score=tuple(float(v) for v in shifted - residue),
        centered=True,
        mean_before_centering=first + residue,
    )


def daily_mean_of_buckets(series: SentimentSeries) -> SentimentSeries:
    """Collapse a 30-minute series to daily values (mean of the UTC day's
    buckets); centering, if wanted, is applied after collapsing."""
    if series.bucket != BUCKET_30MIN:
        raise DataError("daily collapse expects a 30-minute series")
    if series.centered:
        raise DataError("collapse before centering, not after")
    by_day: dict[date, list[int]] = {}
    for i, ts in enumerate(series.bucket_start):
        by_day.setdefault(ts.date(), []).append(i)
    days = sorted(by_day)
    return SentimentSeries(
        bucket_start=tuple(
            datetime(d.year, d.month, d.day, tzinfo=timezone.utc) for d in days
        ),
        score=tuple(
            float(np.mean([series.score[i] for i in by_day[d]])) for d in days
        ),
        count=tuple(sum(series.count[i] for i in by_day[d]) for d in days),
        bucket=BUCKET_DAILY,
    )


def write_sentiment_csv(series: SentimentSeries, fh: TextIO) -> None:
    if series.centered:
        fh.write(
            f"# centered=1 mean_before_centering={series.mean_before_centering!r}\n"
        )
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["bucket_start", "score", "count"])
    for ts, value, n in zip(series.bucket_start, series.score, series.count):
        writer.writerow([format_utc(ts), repr(value), n])


def sentiment_csv_text(series: SentimentSeries) -> str:
    buf = io.StringIO()
    write_sentiment_csv(series, buf)
    return buf.getvalue()


def read_sentiment_csv(fh: TextIO, source: str = "<stream>") -> SentimentSeries:
    centered = False
    mean_before = 0.0
    first = fh.readline()
    if first.startswith("#"):
        parts = dict(
            item.split("=", 1) for item in first[1:].strip().split() if "=" in item
        )
        centered = parts.get("centered") == "1"
        mean_before = float(parts.get("mean_before_centering", "0.0"))
        first = fh.readline()
    header = [h.strip() for h in first.strip().split(",")]
    if header != ["bucket_start", "score", "count"]:
        raise DataError(f"{source}: expected header 'bucket_start,score,count'")
    starts: list[datetime] = []
    scores: list[float] = []
    counts: list[int] = []
    for lineno, row in enumerate(csv.reader(fh), 2):
        if not row:
            continue
        if len(row) != 3:
            raise DataError(f"{source}: line {lineno}: expected 3 fields")
        try:
            starts.append(parse_utc(row[0]))
            scores.append(float(row[1]))
            counts.append(int(row[2]))
        except (DataError, ValueError) as exc:
            raise DataError(f"{source}: line {lineno}: {exc}") from None
    if len(starts) < 1:
        raise DataError(f"{source}: empty sentiment series")
    bucket = starts[1] - starts[0] if len(starts) > 1 else BUCKET_DAILY
    return SentimentSeries(
        bucket_start=tuple(starts),
        score=tuple(scores),
        count=tuple(counts),
        bucket=bucket,
        centered=centered,
        mean_before_centering=mean_before,
    )
