"""Regex-based tweet text cleaning and CJK character splitting."""
from __future__ import annotations

import html
import re

_URL_RE = re.compile(r"https?://\S*")
_MENTION_RE = re.compile(r"@\w+")

# Pictographic blocks: Emoticons, Misc Symbols & Pictographs, Transport & Map,
# Supplemental Symbols & Pictographs, plus the common companions (Misc Symbols,
# Dingbats, flags, extended pictographs) and the emoji variation selector.
_EMOJI_RE = re.compile(
    "["
    "\U00002600-\U000027BF"
    "\U0001F1E6-\U0001F1FF"
    "\U0001F300-\U0001F5FF"
    "\U0001F600-\U0001F64F"
    "\U0001F680-\U0001F6FF"
    "\U0001F700-\U0001F77F"
    "\U0001F900-\U0001F9FF"
    "\U0001FA00-\U0001FAFF"
    "︎️"
    "]+"
)

# C0/C1 controls plus zero-width/format characters become spaces so the
# whitespace collapse can absorb them.
_CONTROL_RE = re.compile(r"[\x00-\x1f\x7f-\x9f​-‏  ⁠﻿]")
_SPACE_RE = re.compile(r"\s+")

# CJK Unified Ideographs, Hangul Syllables, Hiragana, Katakana.
_CJK_RE = re.compile(r"([一-鿿가-힣぀-ゟ゠-ヿ])")


def _decode_entities(text: str) -> str:
    # Iterate to a fixed point so cleaning stays idempotent on inputs
    # like "&amp;lt;" that decode to further entities.
    for _ in range(8):
        decoded = html.unescape(text)
        if decoded == text:
            return decoded
        text = decoded
    return text


def clean_text(raw: str) -> str:
    """Strip URLs, @-mentions, emoji, and control characters; decode HTML
    entities; collapse whitespace. Case is preserved."""
    text = _decode_entities(raw)
    text = _URL_RE.sub(" ", text)
    text = _MENTION_RE.sub(" ", text)
    text = _EMOJI_RE.sub(" ", text)
    text = _CONTROL_RE.sub(" ", text)
    return _SPACE_RE.sub(" ", text).strip()


def split_cjk(text: str) -> str:
    """Separate every CJK ideograph, Hangul syllable, and kana character
    from its neighbors with single spaces. Other runs are untouched."""
    spaced = _CJK_RE.sub(r" \1 ", text)
    return _SPACE_RE.sub(" ", spaced).strip()
