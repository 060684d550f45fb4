"""Wire formats used between pipeline stages but owned by no core module."""
from __future__ import annotations

import csv
import io
from datetime import datetime

from ..errors import DataError
from ..timefmt import format_utc, parse_utc


def scored_csv_text(rows: list[tuple[datetime, float]]) -> str:
    """`timestamp,score` rows for individually scored tweets."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["timestamp", "score"])
    for ts, score in rows:
        writer.writerow([format_utc(ts), repr(score)])
    return buf.getvalue()


def parse_scored_csv(text: str, source: str = "<stream>") -> list[tuple[datetime, float]]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise DataError(f"{source}: empty file") from None
    if [h.strip().lower() for h in header[:2]] != ["timestamp", "score"]:
        raise DataError(f"{source}: expected header 'timestamp,score'")
    rows: list[tuple[datetime, float]] = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) < 2:
            raise DataError(f"{source}: line {line}: expected 2 fields")
        try:
            ts = parse_utc(row[0])
            score = float(row[1])
        except DataError as exc:
            raise DataError(f"{source}: line {line}: {exc}") from None
        except ValueError:
            raise DataError(f"{source}: line {line}: bad score {row[1]!r}") from None
        rows.append((ts, score))
    return rows
