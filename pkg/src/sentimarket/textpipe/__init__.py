"""Tweet text cleaning, CJK splitting, keyword filtering, and CSV parsing."""

from .cleaning import clean_text, split_cjk
from .keywords import (
    DEFAULT_KEYWORDS,
    KeywordSet,
    load_keyword_file,
    match_keywords,
    parse_keyword_text,
)
from .records import (
    TweetRecord,
    parse_tweet_file,
    parse_tweet_rows,
    tweet_csv_text,
    write_tweet_csv,
)

__all__ = [
    "clean_text",
    "split_cjk",
    "KeywordSet",
    "DEFAULT_KEYWORDS",
    "load_keyword_file",
    "match_keywords",
    "parse_keyword_text",
    "TweetRecord",
    "parse_tweet_file",
    "parse_tweet_rows",
    "tweet_csv_text",
    "write_tweet_csv",
]
