"""0-1 pattern matrices for a sequence and their placements in an n x N grid.

Rows and columns are 1-based.  A ``U`` matrix has one 1 per column and its
row indices, read left to right, spell a sequence isomorphic to ``u``.
``UPlus`` / ``UMinus`` matrices merge two consecutive, distinct letters of
``u`` into one column; ``UPlus`` reads the larger row index of that column
first, ``UMinus`` the smaller.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations

from ..core import Pattern
from ..errors import GridTooSmall


class Kind(str, enum.Enum):
    U = "U"
    UPLUS = "UPlus"
    UMINUS = "UMinus"


@dataclass(frozen=True)
class PatternMatrix:
    kind: Kind
    rows: int
    cols: int
    ones: tuple[tuple[int, int], ...]  # (row, col), in reading order
    doubled: int | None = None  # column holding two ones

    def reading(self) -> tuple[int, ...]:
        return tuple(row for row, _ in self.ones)

    def dense(self) -> list[list[int]]:
        grid = [[0] * self.cols for _ in range(self.rows)]
        for row, col in self.ones:
            grid[row - 1][col - 1] = 1
        return grid


@dataclass(frozen=True)
class Placement:
    kind: Kind
    cells: frozenset[tuple[int, int]]


def enumerate_pattern_matrices(u: Pattern, kind: Kind | str) -> list[PatternMatrix]:
    kind = Kind(kind)
    r, letters = u.r, u.letters
    out = []
    seen = set()
    if kind is Kind.U:
        for perm in permutations(range(1, r + 1)):
            ones = tuple((perm[x - 1], c + 1) for c, x in enumerate(letters))
            out.append(PatternMatrix(kind, r, len(letters), ones))
        return out
    for c in range(len(letters) - 1):
        a, b = letters[c], letters[c + 1]
        if a == b:
            continue
        for perm in permutations(range(1, r + 1)):
            ra, rb = perm[a - 1], perm[b - 1]
            if (kind is Kind.UPLUS) != (ra > rb):
                continue
            ones = tuple(
                (perm[x - 1], i + 1 if i <= c else i) for i, x in enumerate(letters)
            )
            key = frozenset(ones)
            if key in seen:
                continue
            seen.add(key)
            out.append(PatternMatrix(kind, r, len(letters) - 1, ones, c + 1))
    return out


def enumerate_placements(n: int, N: int, u: Pattern, kind: Kind | str) -> list[Placement]:
    """Every copy of a pattern matrix of ``kind`` inside the all-ones n x N grid."""
    kind = Kind(kind)
    if n < u.r or N < len(u) - 1:
        raise GridTooSmall(f"grid {n}x{N} cannot hold a placement of {u}")
    out = []
    for matrix in enumerate_pattern_matrices(u, kind):
        for rows in combinations(range(1, n + 1), matrix.rows):
            for cols in combinations(range(1, N + 1), matrix.cols):
                cells = frozenset((rows[i - 1], cols[j - 1]) for i, j in matrix.ones)
                out.append(Placement(kind, cells))
    return out


def index_by_cell(placements: list[Placement]) -> dict[tuple[int, int], list[int]]:
    """Map each grid cell to the indices of the placements covering it."""
    index: dict[tuple[int, int], list[int]] = {}
    for k, p in enumerate(placements):
        for cell in p.cells:
            index.setdefault(cell, []).append(k)
    return index
