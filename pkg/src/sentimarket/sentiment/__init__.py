"""Lexicon sentiment scoring, bucket aggregation, and mean-centering."""

from .lexicon import Lexicon, default_lexicon, load_lexicon, parse_lexicon_text
from .scoring import score_text
from .series import (
    SentimentSeries,
    aggregate,
    center,
    daily_mean_of_buckets,
    read_sentiment_csv,
    sentiment_csv_text,
    write_sentiment_csv,
)

__all__ = [
    "Lexicon",
    "default_lexicon",
    "load_lexicon",
    "parse_lexicon_text",
    "score_text",
    "SentimentSeries",
    "aggregate",
    "center",
    "daily_mean_of_buckets",
    "read_sentiment_csv",
    "write_sentiment_csv",
    "sentiment_csv_text",
]
