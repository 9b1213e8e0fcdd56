"""Patterns, sequences, canonical naming and containment up to isomorphism.

Letters are positive ints and an alphabet of size ``n`` is always
``{1, ..., n}``.  Positions reported by :func:`contains` and accepted by
:func:`contains_through` are 1-based; insertion gaps elsewhere in the
package run from 0 (before the first letter) to ``len(s)``.
"""

from __future__ import annotations

import re
import string
from collections.abc import Sequence
from dataclasses import dataclass, field
from functools import cached_property

from . import _kernels
from .errors import EmptyInput, IndexOutOfRange, InvalidCharacter, ParseError

_ALPHABET = string.ascii_lowercase


def canonical(letters: Sequence[int]) -> tuple[int, ...]:
    """Rename letters so that first occurrences read 1, 2, 3, ..."""
    names: dict[int, int] = {}
    return tuple(names.setdefault(x, len(names) + 1) for x in letters)


@dataclass(frozen=True)
class Pattern:
    """A forbidden sequence kept in canonical (first-occurrence) naming."""

    letters: tuple[int, ...]

    def __post_init__(self):
        if not self.letters:
            raise EmptyInput("pattern must be nonempty")
        object.__setattr__(self, "letters", canonical(self.letters))
        if self.r > len(_ALPHABET):
            raise InvalidCharacter("patterns are limited to 26 distinct letters")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        return parse_pattern(text)

    @cached_property
    def r(self) -> int:
        return max(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __str__(self):
        return "".join(_ALPHABET[x - 1] for x in self.letters)

    def reversed(self) -> "Pattern":
        return Pattern(self.letters[::-1])


@dataclass(frozen=True)
class Seq(Sequence):
    """An immutable sequence of letters over the alphabet ``[n]``.

    ``n`` defaults to the largest letter present.
    """

    letters: tuple[int, ...]
    n: int = field(default=0)

    def __post_init__(self):
        letters = tuple(int(x) for x in self.letters)
        if any(x < 1 for x in letters):
            raise ValueError("letters must be positive integers")
        n = self.n or max(letters, default=0)
        if letters and max(letters) > n:
            raise ValueError(f"letter {max(letters)} exceeds alphabet size {n}")
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "n", n)

    def __len__(self):
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __iter__(self):
        return iter(self.letters)

    def __str__(self):
        return format_seq(self.letters)

    def insert(self, x: int, gap: int) -> "Seq":
        return Seq(self.letters[:gap] + (x,) + self.letters[gap:], max(self.n, x))


def parse_pattern(text: str) -> Pattern:
    """Parse a lowercase a-z pattern string, e.g. ``"abcacbc"``."""
    if not text:
        raise EmptyInput("pattern text is empty")
    bad = [ch for ch in text if ch not in _ALPHABET]
    if bad:
        raise InvalidCharacter(f"invalid pattern character {bad[0]!r}")
    return Pattern(tuple(_ALPHABET.index(ch) + 1 for ch in text))


def parse_seq(text: str, n: int | None = None) -> Seq:
    """Parse comma- or whitespace-separated positive integers."""
    text = text.strip()
    tokens = re.split(r"\s*,\s*|\s+", text) if text else []
    letters = []
    for tok in tokens:
        if not re.fullmatch(r"[0-9]+", tok) or int(tok) < 1:
            raise ParseError(f"not a positive integer: {tok!r}")
        letters.append(int(tok))
    try:
        return Seq(tuple(letters), n or 0)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_seq(letters: Sequence[int]) -> str:
    return ",".join(str(x) for x in letters)


def canonicalize(s: Sequence[int]) -> Seq:
    n = s.n if isinstance(s, Seq) else 0
    letters = canonical(s)
    return Seq(letters, max(n, max(letters, default=0)))


def is_r_sparse(s: Sequence[int], r: int) -> bool:
    """True iff every ``r`` consecutive letters of ``s`` are distinct."""
    if r < 1:
        raise ValueError("r must be positive")
    return _kernels.is_sparse(s, r)


def _pattern_letters(u) -> tuple[int, ...]:
    if isinstance(u, Pattern):
        return u.letters
    if isinstance(u, str):
        return parse_pattern(u).letters
    return canonical(u)


def contains(s: Sequence[int], u) -> tuple[int, ...] | None:
    """Return the 1-based positions of a copy of ``u`` in ``s``, or None.

    The witness is the first one found when sequence letters are bound in
    increasing order and positions are scanned left to right.
    """
    pat = _pattern_letters(u)
    if len(pat) > len(s):
        return None
    found = _kernels.find_copy(s, pat)
    return None if found is None else tuple(q + 1 for q in found)


def contains_through(s: Sequence[int], u, pos: int) -> bool:
    """True iff some copy of ``u`` in ``s`` uses the 1-based position ``pos``."""
    if not 1 <= pos <= len(s):
        raise IndexOutOfRange(f"position {pos} outside 1..{len(s)}")
    pat = _pattern_letters(u)
    if len(pat) > len(s):
        return False
    return _kernels.copy_through(s, pat, pos - 1)
