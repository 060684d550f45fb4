"""Tweet CSV parsing into cleaned, keyword-matched records."""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Iterable, TextIO

from ..errors import DataError
from ..timefmt import format_utc, parse_utc
from .cleaning import clean_text, split_cjk
from .keywords import DEFAULT_KEYWORDS, SECTIONS, KeywordSet, match_keywords


@dataclass
class TweetRecord:
    timestamp: datetime
    text: str
    matched_keywords: list[str] = field(default_factory=list)


def parse_tweet_rows(
    fh: TextIO,
    keywords: KeywordSet = DEFAULT_KEYWORDS,
    sections: tuple[str, ...] = SECTIONS,
    source: str = "<stream>",
) -> list[TweetRecord]:
    """Parse ``timestamp,text`` CSV rows into cleaned, CJK-split,
    keyword-matched records sorted by timestamp."""
    reader = csv.reader(fh)
    try:
        header = next(reader)
    except StopIteration:
        return []
    if [h.strip().lower() for h in header[:2]] != ["timestamp", "text"]:
        raise DataError(f"{source}: expected header 'timestamp,text', got {header!r}")

    records: list[TweetRecord] = []
    for row in reader:
        if not row:
            continue
        line = reader.line_num
        if len(row) < 2:
            raise DataError(f"{source}: line {line}: expected 2 fields, got {len(row)}")
        try:
            ts = parse_utc(row[0])
        except DataError as exc:
            raise DataError(f"{source}: line {line}: {exc}") from None
        text = split_cjk(clean_text(row[1]))
        records.append(TweetRecord(ts, text, match_keywords(text, keywords, sections)))
    records.sort(key=lambda r: r.timestamp)
    return records


def parse_tweet_file(
    path: str | Path,
    keywords: KeywordSet = DEFAULT_KEYWORDS,
    sections: tuple[str, ...] = SECTIONS,
) -> list[TweetRecord]:
    try:
        with open(path, encoding="utf-8", newline="") as fh:
            return parse_tweet_rows(fh, keywords, sections, source=str(path))
    except UnicodeDecodeError as exc:
        raise DataError(f"{path}: not valid UTF-8: {exc}") from None


def write_tweet_csv(records: Iterable[TweetRecord], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["timestamp", "text", "matched_keywords"])
    for record in records:
        writer.writerow(
            [format_utc(record.timestamp), record.text, ";".join(record.matched_keywords)]
        )


def tweet_csv_text(records: Iterable[TweetRecord]) -> str:
    buf = io.StringIO()
    write_tweet_csv(records, buf)
    return buf.getvalue()
