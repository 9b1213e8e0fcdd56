"""Exact Sat(n, u) by exhaustive search over canonical sequences."""

from __future__ import annotations

from .. import _kernels
from ..core import Pattern, Seq
from ..errors import AlphabetTooSmall, BadParameters, BoundExceeded


def _saturated_of_length(n: int, u: Pattern, length: int) -> tuple[int, ...] | None:
    """Lexicographically least saturated sequence of exactly ``length`` letters.

    Only canonical sequences are generated (each new letter is the next unused
    one), and every prefix is kept r-sparse and u-free since both properties
    pass to subsequences.
    """
    pat, r = u.letters, u.r
    seq: list[int] = []

    def extend(top: int) -> tuple[int, ...] | None:
        if len(seq) == length:
            if _kernels.first_insertion(seq, pat, r, n) is None:
                return tuple(seq)
            return None
        window = seq[len(seq) - r + 1:] if r > 1 else []
        for x in range(1, min(top + 1, n) + 1):
            if x in window:
                continue
            seq.append(x)
            if not _kernels.copy_through(seq, pat, len(seq) - 1):
                found = extend(max(top, x))
                if found is not None:
                    return found
            seq.pop()
        return None

    return extend(0)


def search_sat(n: int, u: Pattern, max_len: int | None = None) -> tuple[int, Seq]:
    """Smallest length of a u-saturated sequence on ``n`` letters, with a witness.

    ``max_len`` defaults to the greedy length, which is always attained.
    """
    if n < u.r:
        raise AlphabetTooSmall(f"n = {n} is below the {u.r} letters of {u}")
    if max_len is None:
        from ..saturation import greedy_saturate

        max_len = len(greedy_saturate(n, u))
    if max_len < 1:
        raise BadParameters("max_len must be at least 1")
    for length in range(max(u.r - 1, 0), max_len + 1):
        found = _saturated_of_length(n, u, length)
        if found is not None:
            return length, Seq(found, n)
    raise BoundExceeded(f"no {u}-saturated sequence on {n} letters of length <= {max_len}")
