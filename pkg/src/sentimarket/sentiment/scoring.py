"""Deterministic lexicon scoring of cleaned tweet text."""
from __future__ import annotations

import math

from .lexicon import Lexicon

_NEGATION_WINDOW = 2


def _normalize_token(token: str) -> str:
    return token.strip("'\"`.,;:!?()[]{}<>~*_-#&%$+=/\\|^").lower()


def score_text(text: str, lexicon: Lexicon) -> float:
    """Score whitespace-tokenized text in (-1, +1).

    Valences are summed with a sign flip when a negator appears within
    the two preceding tokens and scaled by an immediately preceding
    intensifier; the sum is squashed through tanh. Unknown tokens
    contribute nothing, so all-unknown text scores exactly 0.
    """
    tokens = [_normalize_token(t) for t in text.split()]
    total = 0.0
    for i, token in enumerate(tokens):
        valence = lexicon.entries.get(token)
        if valence is None:
            continue
        if i > 0:
            factor = lexicon.intensifiers.get(tokens[i - 1])
            if factor is not None:
                valence *= factor
        window = tokens[max(0, i - _NEGATION_WINDOW) : i]
        if any(t in lexicon.negators for t in window):
            valence = -valence
        total += valence
    return math.tanh(total)
