"""Accent folding, slugs, and deterministic ordering helpers.

All functions are locale-independent: ordering and folding never consult
the process locale, so output is identical across machines.
"""

from __future__ import annotations

import re
import unicodedata
from decimal import Decimal

# Latin-1 / Latin Extended-A letters that NFD decomposition leaves intact.
_FOLD_OVERRIDES = {
    "æ": "ae", "Æ": "AE",
    "ø": "o", "Ø": "O",
    "œ": "oe", "Œ": "OE",
    "ß": "ss",
    "ð": "d", "Ð": "D",
    "þ": "th", "Þ": "TH",
    "đ": "d", "Đ": "D",
    "ħ": "h", "Ħ": "H",
    "ĳ": "ij", "Ĳ": "IJ",
    "ĸ": "k",
    "ł": "l", "Ł": "L",
    "ŋ": "n", "Ŋ": "N",
    "ŧ": "t", "Ŧ": "T",
    "ſ": "s",
}

_SLUG_SEP = re.compile(r"[^a-z0-9]+")


def fold_ascii(text: str) -> str:
    """Strip accents down to ASCII; characters with no ASCII base are dropped."""
    out = []
    for ch in text:
        if ord(ch) < 128:
            out.append(ch)
            continue
        if ch in _FOLD_OVERRIDES:
            out.append(_FOLD_OVERRIDES[ch])
            continue
        decomposed = unicodedata.normalize("NFD", ch)
        base = "".join(c for c in decomposed if ord(c) < 128)
        out.append(base)
    return "".join(out)


def slugify(text: str) -> str:
    """Lowercase ASCII slug; non-alphanumerics collapse to single hyphens."""
    folded = fold_ascii(text).lower()
    slug = _SLUG_SEP.sub("-", folded).strip("-")
    return slug or "untitled"


def letter_bucket(title: str) -> str:
    """Index letter for a title: A-Z after accent folding, else '#'."""
    stripped = title.strip()
    if not stripped:
        return "#"
    folded = fold_ascii(stripped[0]).upper()
    if folded and "A" <= folded[0] <= "Z":
        return folded[0]
    return "#"


def sort_fold(text: str) -> str:
    """Casefolded, accent-folded form used for codepoint-order sorting."""
    return fold_ascii(text).casefold()


def format_number(value: int | float) -> str:
    """Canonical decimal rendering: no exponent, '.' separator, no trailing zeros."""
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers")
    if isinstance(value, int):
        return str(value)
    # repr() gives the shortest round-tripping digits; Decimal removes the exponent.
    text = format(Decimal(repr(value)), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    if text in ("-0", ""):
        return "0"
    return text
