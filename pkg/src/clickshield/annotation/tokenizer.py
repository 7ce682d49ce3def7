"""Headline tokenizer.

Splits on whitespace and punctuation boundaries, keeps numbers and
hyphenated words whole, and splits English contractions into base +
suffix tokens (both flagged) so that shortened forms can be counted.
Quotation marks are their own token class so that downstream pattern
normalization can collapse quoted spans.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

QUOTE_CHARS = "\"'`‘’“”"

# Suffixes produced by splitting contractions; straight or curly apostrophe.
_CONTRACTION_SUFFIXES = ("n't", "'re", "'ll", "'ve", "'d", "'m", "'s")

_TOKEN_RE = re.compile(
    r"n['’]t(?!\w)"              # standalone n't (idempotent re-tokenization)
    r"|['’](?:re|ll|ve|d|m|s)(?!\w)"  # standalone 're / 'll / ...
    r"|\d+(?:[.,]\d+)*(?![\w-])"      # numbers, incl. 3.5 and 7,623
    r"|\w+(?:[-'’]\w+)*"         # words, hyphenated words, raw contractions
    r"|[" + QUOTE_CHARS + r"]"        # each quote mark is its own token
    r"|[^\w\s" + QUOTE_CHARS + r"]+", # runs of other punctuation
    re.IGNORECASE,
)

_NUMBER_RE = re.compile(r"\d+(?:[.,]\d+)*\Z")


@dataclass
class Token:
    surface: str
    normalized: str
    index: int
    is_contraction_part: bool = False

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty token surface")


def is_number(surface: str) -> bool:
    return bool(_NUMBER_RE.match(surface))


def is_word(surface: str) -> bool:
    return any(c.isalnum() for c in surface)


def is_quote(surface: str) -> bool:
    return len(surface) == 1 and surface in QUOTE_CHARS


def _split_contraction(piece: str) -> list[tuple[str, bool]]:
    low = piece.lower().replace("’", "'")
    if low in _CONTRACTION_SUFFIXES:
        return [(piece, True)]
    for suffix in _CONTRACTION_SUFFIXES:
        if low.endswith(suffix) and len(piece) > len(suffix):
            cut = len(piece) - len(suffix)
            return [(piece[:cut], True), (piece[cut:], True)]
    return [(piece, False)]


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    for match in _TOKEN_RE.finditer(text):
        piece = match.group(0)
        if is_word(piece) and not is_number(piece):
            parts = _split_contraction(piece)
        else:
            parts = [(piece, False)]
        for surface, flagged in parts:
            tokens.append(
                Token(
                    surface=surface,
                    normalized=surface.lower(),
                    index=len(tokens),
                    is_contraction_part=flagged,
                )
            )
    return tokens
