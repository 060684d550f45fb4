"""Generate the bundled 60-day sample fixtures.

Writes data/sample_tweets.csv and data/sample_ohlc.csv, then pushes both
through the real pipeline to prove the fixtures are usable: every
calendar day must keep at least one keyword tweet so the daily sentiment
series aligns with the filled price calendar.

Run from the repository root:  python3 tools/make_fixtures.py
"""
from __future__ import annotations

import csv
import io
import sys
from datetime import date, datetime, timedelta, timezone
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from sentimarket.market import fill_calendar, parse_ohlc_rows  # noqa: E402
from sentimarket.sentiment import (  # noqa: E402
    aggregate,
    center,
    daily_mean_of_buckets,
    default_lexicon,
    score_text,
)
from sentimarket.sentiment.series import BUCKET_30MIN  # noqa: E402
from sentimarket.textpipe import parse_tweet_rows  # noqa: E402

START = date(2020, 3, 2)
DAYS = 60

POSITIVE = [
    "Vaccine trial results look great, recovery hopes build",
    "Markets cheer encouraging vaccine data 📈 #recovery",
    "@healthdesk mask &amp; glove shipments back on schedule, suppliers relieved",
    "Quarantine rules easing soon, shops hopeful https://news.example.com/reopen",
    "Testing site capacity doubled, a good step against the virus",
    "好消息 vaccine progress keeps the outlook bright",
    "Grocery restock complete, supermarket shelves full again, staff happy",
]

NEGATIVE = [
    "Outbreak worsens and panic buying strips the supermarket bare",
    "Toilet paper hoarding is awful, shelves empty by noon 😞",
    "Virus cases surge again, a terrible week for the index",
    "Lock down extended another month, small businesses suffer",
    "疫情恶化 the virus spread keeps everyone worried",
    "@cityhall quarantine violations rising, enforcement weak and slow",
    "Flour and rice gone again, this hoarding is getting ugly",
]

NEUTRAL_KEYWORD = [
    "CDC posts updated testing site hours https://cdc.example.gov/sites",
    "Day {n} of quarantine, baked bread with the last of the flour",
    "Mask distribution point moved to the east supermarket entrance",
    "Reminder: stay home orders remain in effect through month end",
]

NOISE = [
    "just finished my morning run",
    "coffee tastes better on Fridays ☕",
    "new episode drops tonight, no spoilers please",
    "my cat knocked the router off the shelf again",
]

SLOTS = ["08:55", "09:05", "09:20", "11:40", "13:15", "16:30", "20:45", "22:10"]


def build_tweets(rng: np.random.Generator) -> list[tuple[str, str]]:
    rows = []
    for d in range(DAYS):
        day = START + timedelta(days=d)
        # the mood drifts from gloomy March toward a hopeful late April
        p_pos = 0.25 + 0.5 * d / (DAYS - 1)
        n_kw = int(rng.integers(2, 5))
        n_noise = int(rng.integers(0, 3))
        slots = sorted(rng.choice(len(SLOTS), size=n_kw + n_noise, replace=False))
        texts = []
        for _ in range(n_kw):
            roll = rng.random()
            if roll < 0.2:
                pool = NEUTRAL_KEYWORD
            elif rng.random() < p_pos:
                pool = POSITIVE
            else:
                pool = NEGATIVE
            texts.append(pool[int(rng.integers(len(pool)))].format(n=d + 1))
        for _ in range(n_noise):
            texts.append(NOISE[int(rng.integers(len(NOISE)))])
        for slot, text in zip(slots, texts):
            hh, mm = SLOTS[slot].split(":")
            stamp = datetime(
                day.year, day.month, day.day, int(hh), int(mm), tzinfo=timezone.utc
            )
            rows.append((stamp.strftime("%Y-%m-%dT%H:%M:%SZ"), text))
    return rows


def build_ohlc(rng: np.random.Generator) -> list[tuple[str, str, str, str, str, str]]:
    rows = []
    close = 100.0
    trading_day = 0
    for d in range(DAYS):
        day = START + timedelta(days=d)
        if day.weekday() >= 5:
            continue
        drift = -0.006 if trading_day < 15 else 0.0015
        open_ = close
        close = round(close * float(np.exp(drift + rng.normal(0.0, 0.012))), 2)
        open_ = round(open_, 2)
        high = round(max(open_, close) + 0.01 + abs(float(rng.normal(0.0, 0.15))), 2)
        low = round(min(open_, close) - 0.01 - abs(float(rng.normal(0.0, 0.15))), 2)
        volume = float(int(rng.integers(900, 1600)) * 1000)
        rows.append(
            (
                day.isoformat(),
                f"{open_:.2f}",
                f"{high:.2f}",
                f"{low:.2f}",
                f"{close:.2f}",
                f"{volume:.1f}",
            )
        )
        trading_day += 1
    return rows


def main() -> None:
    root = Path(__file__).resolve().parent.parent
    out_dir = root / "data"
    out_dir.mkdir(exist_ok=True)
    rng = np.random.default_rng(20200302)

    tweet_rows = build_tweets(rng)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["timestamp", "text"])
    writer.writerows(tweet_rows)
    (out_dir / "sample_tweets.csv").write_text(buf.getvalue(), encoding="utf-8")

    ohlc_rows = build_ohlc(rng)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["date", "open", "high", "low", "close", "volume"])
    writer.writerows(ohlc_rows)
    (out_dir / "sample_ohlc.csv").write_text(buf.getvalue(), encoding="utf-8")

    # prove the fixtures survive the pipeline
    lexicon = default_lexicon()
    for text in POSITIVE:
        assert score_text(text, lexicon) > 0, f"not positive: {text}"
    for text in NEGATIVE:
        assert score_text(text, lexicon) < 0, f"not negative: {text}"

    with open(out_dir / "sample_tweets.csv", encoding="utf-8") as fh:
        records = parse_tweet_rows(fh, source="sample_tweets.csv")
    kept = [r for r in records if r.matched_keywords]
    days_covered = {r.timestamp.date() for r in kept}
    expected = {START + timedelta(days=d) for d in range(DAYS)}
    missing = sorted(expected - days_covered)
    assert not missing, f"days without keyword tweets: {missing}"

    scored = [(r.timestamp, score_text(r.text, lexicon)) for r in kept]
    daily = daily_mean_of_buckets(aggregate(scored, BUCKET_30MIN))
    center(daily)  # validates centering works on the series

    with open(out_dir / "sample_ohlc.csv", encoding="utf-8") as fh:
        prices = parse_ohlc_rows(fh, "sample_ohlc.csv")
    filled = fill_calendar(prices)
    assert filled.is_contiguous() and len(filled) == DAYS

    print(f"{len(records)} tweets ({len(kept)} keyword-bearing) over {DAYS} days")
    print(f"{len(prices)} trading days -> {len(filled)} filled calendar days")


if __name__ == "__main__":
    main()
