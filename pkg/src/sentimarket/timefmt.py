"""UTC timestamp and calendar date parsing/formatting helpers.

All timestamps in the toolkit are timezone-aware UTC instants with
seconds precision; all dates are ISO calendar dates.
"""
from __future__ import annotations

from datetime import date, datetime, timezone

from .errors import DataError


def parse_utc(value: str) -> datetime:
    """Parse an ISO-8601 UTC instant, accepting a trailing 'Z'."""
    text = value.strip()
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        parsed = datetime.fromisoformat(text)
    except ValueError:
        raise DataError(f"unparseable timestamp: {value!r}") from None
    if parsed.tzinfo is None:
        parsed = parsed.replace(tzinfo=timezone.utc)
    return parsed.astimezone(timezone.utc).replace(microsecond=0)


def format_utc(instant: datetime) -> str:
    return instant.astimezone(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def parse_date(value: str) -> date:
    try:
        return date.fromisoformat(value.strip())
    except ValueError:
        raise DataError(f"unparseable date: {value!r}") from None
