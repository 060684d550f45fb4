"""Keyword phrase sets and word-boundary phrase matching."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from ..errors import DataError

_EPIDEMIC_DEFAULT = (
    "covid-19", "corona", "virus", "sars-cov-2", "pandemic", "mask",
    "stay home", "work from home", "endemic", "breathing", "china", "wuhan",
    "lock down", "outbreak", "positive", "testing site", "asymptonmatic",
    "asymptomatic", "epidemic", "quarantine", "vaccine", "cdc", "isolation",
    "n95", "kn95", "transmission", "community spread", "flu shot",
)

_PANIC_BUYING_DEFAULT = (
    "toilet paper", "pasta", "rice", "flour", "hoarding", "fruit",
    "vegetables", "panic buying", "supermarket",
)

SECTIONS = ("epidemic", "panic-buying")


def _normalize(phrase: str) -> str:
    return " ".join(phrase.lower().split())


@dataclass(frozen=True)
class KeywordSet:
    """Two sections of lowercase keyword phrases, in iteration order."""

    epidemic: tuple[str, ...]
    panic_buying: tuple[str, ...]

    def __post_init__(self):
        for section in (self.epidemic, self.panic_buying):
            for phrase in section:
                if phrase != _normalize(phrase) or not phrase:
                    raise DataError(f"keyword phrase not normalized: {phrase!r}")
        if not self.epidemic and not self.panic_buying:
            raise DataError("keyword set is empty")

    def phrases(self, sections: tuple[str, ...] = SECTIONS) -> tuple[str, ...]:
        """All phrases of the requested sections, deduplicated, in order."""
        chosen: list[str] = []
        for name in sections:
            if name not in SECTIONS:
                raise DataError(f"unknown keyword section: {name!r}")
            part = self.epidemic if name == "epidemic" else self.panic_buying
            for phrase in part:
                if phrase not in chosen:
                    chosen.append(phrase)
        return tuple(chosen)


DEFAULT_KEYWORDS = KeywordSet(_EPIDEMIC_DEFAULT, _PANIC_BUYING_DEFAULT)


@lru_cache(maxsize=64)
def _compile(phrase: str) -> re.Pattern:
    # Lookarounds instead of \b so phrases that begin or end with a
    # non-word character still bind to whole words.
    words = (re.escape(w) for w in phrase.split())
    return re.compile(r"(?<!\w)" + r"\s+".join(words) + r"(?!\w)", re.IGNORECASE)


def match_keywords(
    text: str,
    keywords: KeywordSet,
    sections: tuple[str, ...] = SECTIONS,
) -> list[str]:
    """Every keyword phrase occurring in ``text`` as a contiguous word
    sequence, deduplicated, in keyword-set iteration order."""
    return [p for p in keywords.phrases(sections) if _compile(p).search(text)]


def parse_keyword_text(text: str, source: str = "<text>") -> KeywordSet:
    """Parse keyword file content: one phrase per line, ``#`` comments, and
    the section headers ``[epidemic]`` / ``[panic-buying]``."""
    sections: dict[str, list[str]] = {name: [] for name in SECTIONS}
    current: str | None = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            name = line[1:-1].strip().lower()
            if name not in sections:
                raise DataError(f"{source}:{lineno}: unknown section {name!r}")
            current = name
            continue
        if current is None:
            raise DataError(f"{source}:{lineno}: phrase before any section header")
        phrase = _normalize(line)
        if phrase not in sections[current]:
            sections[current].append(phrase)
    return KeywordSet(tuple(sections["epidemic"]), tuple(sections["panic-buying"]))


def load_keyword_file(path: str | Path) -> KeywordSet:
    return parse_keyword_text(Path(path).read_text(encoding="utf-8"), str(path))
