"""Finite words over digit alphabets.

A word is a plain ``str`` of digit characters; ``""`` is the empty word.
Alphabets have at most 10 letters, written ``'0'`` .. ``'9'``.
"""

from __future__ import annotations

from .errors import AlphabetError, DomainError, ParseError

MAX_ALPHABET = 10
DIGITS = "0123456789"


def validate_word(w: str, alphabet_size: int = MAX_ALPHABET) -> None:
    if not 1 <= alphabet_size <= MAX_ALPHABET:
        raise AlphabetError(f"alphabet size must be 1..{MAX_ALPHABET}, got {alphabet_size}")
    for ch in set(w):
        if ch not in DIGITS:
            raise ParseError(f"word contains non-digit character {ch!r}")
        if int(ch) >= alphabet_size:
            raise AlphabetError(f"letter {ch!r} outside alphabet of size {alphabet_size}")


def parse_word(text: str, alphabet_size: int = MAX_ALPHABET) -> str:
    """Validate a digit string and return it unchanged."""
    validate_word(text, alphabet_size)
    return text


def factors(w: str, length: int) -> list[str]:
    """Distinct factors of ``w`` of exactly ``length``, lexicographically sorted.

    ``length`` larger than ``len(w)`` yields the empty list; length 0 yields
    the empty word.
    """
    if length < 0:
        raise DomainError("factor length must be non-negative")
    if length > len(w):
        return []
    return sorted({w[i : i + length] for i in range(len(w) - length + 1)})


def contains_factor(w: str, u: str) -> bool:
    """True iff ``u`` occurs contiguously in ``w``; the empty word always occurs."""
    return u in w
