"""Valence lexicon loading.

Lexicon TSV format: ``token<TAB>valence`` rows, then optional sections
``[negators]`` (one token per line) and ``[intensifiers]``
(``token<TAB>multiplier``). ``#`` starts a comment.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from ..errors import DataError


@dataclass(frozen=True)
class Lexicon:
    entries: dict[str, float]
    negators: frozenset[str] = field(default_factory=frozenset)
    intensifiers: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for token, valence in self.entries.items():
            if not -1.0 <= valence <= 1.0:
                raise DataError(f"valence out of [-1,1] for {token!r}: {valence}")
        for token, mult in self.intensifiers.items():
            if not (math.isfinite(mult) and mult > 0):
                raise DataError(f"intensifier multiplier must be positive: {token!r}")


def parse_lexicon_text(text: str, source: str = "<string>") -> Lexicon:
    entries: dict[str, float] = {}
    negators: set[str] = set()
    intensifiers: dict[str, float] = {}
    section = "entries"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if line.strip().startswith("["):
            name = line.strip().strip("[]").lower()
            if name not in ("negators", "intensifiers"):
                raise DataError(f"{source}:{lineno}: unknown section {name!r}")
            section = name
            continue
        fields = line.split("\t")
        token = fields[0].strip().lower()
        if section == "negators":
            if len(fields) != 1:
                raise DataError(f"{source}:{lineno}: negator lines carry one token")
            negators.add(token)
            continue
        if len(fields) != 2:
            raise DataError(f"{source}:{lineno}: expected token<TAB>value")
        try:
            value = float(fields[1])
        except ValueError:
            raise DataError(f"{source}:{lineno}: bad number {fields[1]!r}") from None
        if section == "entries":
            entries[token] = value
        else:
            intensifiers[token] = value
    return Lexicon(entries, frozenset(negators), intensifiers)


def load_lexicon(path: str | Path) -> Lexicon:
    return parse_lexicon_text(Path(path).read_text(encoding="utf-8"), source=str(path))


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    data = resources.files(__package__).joinpath("data/default_lexicon.tsv")
    return parse_lexicon_text(data.read_text(encoding="utf-8"), source="default_lexicon.tsv")
