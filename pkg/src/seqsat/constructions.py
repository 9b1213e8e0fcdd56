"""Explicit saturated-sequence constructions and 3-letter pattern statistics.

Every builder returns a :class:`ConstructionResult` carrying the verdict of
:func:`seqsat.saturation.verify`; a construction that fails verification is
reported, never raised.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _kernels
from .core import Pattern, Seq, contains, is_r_sparse
from .errors import BadParameters, NoFinitePPadding, NotThreeLetters, PreconditionFailed, ShapeMismatch
from .saturation import SaturationReport, Verdict, _as_pattern, verify

_FORWARD = {(1, 2), (2, 3), (3, 1)}
_BACKWARD = {(1, 3), (2, 1), (3, 2)}
_ROTATIONS = {(1, 2, 3), (2, 3, 1), (3, 1, 2)}


@dataclass(frozen=True)
class FStats:
    f0: int  # ab, bc, ca
    f1: int  # ac, ba, cb
    f2: int  # equal neighbours


@dataclass
class ConstructionResult:
    seq: Seq
    family: str
    report: SaturationReport
    predicted_length: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> Verdict:
        return self.report.verdict

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "n": self.seq.n,
            "length": len(self.seq),
            "verdict": self.verdict.value,
            "predicted_length": self.predicted_length,
            **({"details": self.details} if self.details else {}),
        }


def _result(letters, n, u, family, predicted=None, **details) -> ConstructionResult:
    seq = Seq(tuple(letters), n)
    return ConstructionResult(seq, family, verify(seq, n, u), predicted, details)


def _require_three(u: Pattern):
    if u.r != 3:
        raise NotThreeLetters(f"{u} has {u.r} distinct letters")


def f_stats(u) -> FStats:
    u = _as_pattern(u)
    _require_three(u)
    pairs = list(zip(u.letters, u.letters[1:]))
    return FStats(
        sum(p in _FORWARD for p in pairs),
        sum(p in _BACKWARD for p in pairs),
        sum(a == b for a, b in pairs),
    )


def s_r(u) -> Seq:
    """Longest prefix of ``1, 2, ..., r, 1, 2, ...`` that avoids ``u``."""
    u = _as_pattern(u)
    r = u.r
    s: list[int] = []
    while True:
        s.append(len(s) % r + 1)
        if contains(s, u) is not None:
            s.pop()
            return Seq(tuple(s), r)


def s_r_shape(u) -> tuple[int, int]:
    """``(t, j)`` with ``s_r(u) = (1..r)^t 1..j`` and ``0 <= j < r``."""
    u = _as_pattern(u)
    return divmod(len(s_r(u)), u.r)


def s_r_prime(u) -> Seq:
    """``(1..r+1)^t 1..j`` built from the shape of ``s_r(u)``."""
    u = _as_pattern(u)
    r = u.r
    t, j = s_r_shape(u)
    if j == 0:
        raise ShapeMismatch(f"s_r({u}) = (1..{r})^{t} has an empty tail")
    block = list(range(1, r + 2))
    return Seq(tuple(block * t + block[:j]), r + 1)


def is_irreducible(u) -> bool:
    """No cut ``u = u1 u2`` with letter-disjoint halves."""
    letters = _as_pattern(u).letters
    return not any(
        not set(letters[:c]) & set(letters[c:]) for c in range(1, len(letters))
    )


def is_strongly_irreducible(u) -> bool:
    """No pair of letters with every occurrence of one before every occurrence of the other."""
    letters = _as_pattern(u).letters
    first = {}
    last = {}
    for i, x in enumerate(letters):
        first.setdefault(x, i)
        last[x] = i
    for a in first:
        for b in first:
            if a != b and last[a] < first[b]:
                return False
    return True


def block_construction(n: int, u) -> ConstructionResult:
    """Disjoint shifted copies of ``s_r(u)``, with ``n mod r`` blocks widened to ``s_r'(u)``."""
    u = _as_pattern(u)
    r = u.r
    letters = u.letters
    if len(letters) < 2 or letters[0] != letters[1] or letters[-1] != letters[-2]:
        raise PreconditionFailed(f"{u} is not of the form aa...bb")
    if not is_irreducible(u):
        raise PreconditionFailed(f"{u} is reducible")
    if n < r:
        raise PreconditionFailed(f"need n >= r = {r}")
    m, j = divmod(n, r)
    base = list(s_r(u))
    t, _ = s_r_shape(u)
    wide = list(s_r_prime(u)) if j else []
    if j > m:
        raise PreconditionFailed(f"n = {n} needs {j} widened blocks but only {m} blocks exist")
    out: list[int] = []
    offset = 0
    for k in range(m):
        if k < j:
            out += [x + offset for x in wide]
            offset += r + 1
        else:
            out += [x + offset for x in base]
            offset += r
    assert offset == n
    return _result(out, n, u, "blocks", m * len(base) + j * t, blocks=m, widened=j)


def _t_r(r: int, k: int, pad: int) -> list[int]:
    aux = list(range(1, r))
    return aux * pad + (aux + [r]) * k + aux * pad


def _max_repetitions(u: Pattern, pad: int) -> int:
    k = 1
    while contains(_t_r(u.r, k, pad), u) is None:
        k += 1
        if k > len(u) + 1:
            raise NoFinitePPadding(f"t_r({k}) still avoids {u}")
    return k - 1


def infinite_analogue(n: int, u) -> ConstructionResult:
    """Finite window ``t[1] ... t[n]`` of the doubly infinite saturated sequence.

    ``t[m] = (a_1 ... a_{r-1} m)^p`` with ``p`` the largest repetition count
    for which a single integer letter cannot complete a copy of ``u``.  The
    auxiliary letters are ``1..r-1`` and integer ``m`` becomes ``r - 1 + m``.
    """
    u = _as_pattern(u)
    r = u.r
    if r < 2 or not is_strongly_irreducible(u):
        raise PreconditionFailed(f"{u} is not strongly irreducible")
    if any(u.letters.count(x) < 2 for x in range(1, r + 1)):
        raise PreconditionFailed(f"some letter of {u} occurs only once")
    if n < 1:
        raise BadParameters("n must be positive")
    pad = len(u)
    p = _max_repetitions(u, pad)
    p_check = _max_repetitions(u, pad + 1)
    if p != p_check:
        raise NoFinitePPadding(f"p changed from {p} to {p_check} when padding grew")
    aux = list(range(1, r))
    letters: list[int] = []
    for m in range(1, n + 1):
        letters += (aux + [r - 1 + m]) * p
    alphabet = r - 1 + n
    block = p * r
    unblocked = []
    for x in range(1, alphabet + 1):
        for g in range(len(letters) + 1):
            t = letters[:g] + [x] + letters[g:]
            lo = max(0, g - r + 1)
            if x in t[lo:g] or x in t[g + 1:g + r]:
                continue
            if not _kernels.copy_through(t, u.letters, g):
                unblocked.append((x, g))
    k0 = None
    for k in range(0, len(u) + 1):
        start, end = k * block, (n - k - 1) * block
        if start > end:
            break
        if not any(start <= g <= end for _, g in unblocked):
            k0 = k
            break
    return _result(
        letters,
        alphabet,
        u,
        "infinite",
        n * block,
        p=p,
        padding=pad,
        padding_stable=True,
        k0=k0,
        middle_blocked=k0 is not None,
        unblocked=[list(e) for e in unblocked],
    )


@dataclass(frozen=True)
class S3Length:
    length: int  # |u| - 1 + 2 f2 + min(f0, f1)
    single_f2: int  # same with f2 counted once


def s3_length_formula(u) -> S3Length:
    u = _as_pattern(u)
    _require_three(u)
    if u.letters[:3] != (1, 2, 3):
        raise PreconditionFailed(f"{u} does not begin with three distinct letters")
    f = f_stats(u)
    base = len(u) - 1 + min(f.f0, f.f1)
    return S3Length(base + 2 * f.f2, base + f.f2)


def satisfies_thm_3letter(u) -> bool:
    """Hypotheses under which the recursive 3-letter construction avoids ``u``."""
    u = _as_pattern(u)
    if u.r != 3 or len(u) < 6 or u.letters[:3] != (1, 2, 3):
        return False
    if u.letters[-3:] not in _ROTATIONS:
        return False
    f = f_stats(u)
    return f.f0 >= f.f1 + 5


def _chain(core: list[int], chain: list[int]) -> list[int]:
    """Overlapping copies of ``core`` on letter triples taken along ``chain``.

    The first copy maps 1, 2, 3 to ``chain[:3]``; each further letter ``z``
    appends a copy on (second-last, last, ``z``) minus its first two letters.
    """
    name = dict(zip((1, 2, 3), chain[:3]))
    out = [name[c] for c in core]
    for z in chain[3:]:
        name = {1: out[-2], 2: out[-1], 3: z}
        out += [name[c] for c in core[2:]]
    return out


def s_bracket(n: int, u) -> ConstructionResult:
    """Recursive sequence ``s[n]``: ``s[3] = s_3(u)``, then one new letter per step."""
    u = _as_pattern(u)
    _require_three(u)
    if n < 3:
        raise BadParameters("n must be at least 3")
    core = list(s_r(u))
    predicted = len(core) + (n - 3) * (len(core) - 2)
    if len(core) < 3:
        # a 2-letter core never reaches the third letter
        letters = core
    else:
        letters = _chain(core, list(range(1, n + 1)))
    return _result(letters, n, u, "s-bracket", predicted)


_VARIANTS = ("plain", "plus_a", "plus_ab")


def alternation_pattern(t: int, variant: str = "plain") -> Pattern:
    suffix = {"plain": (), "plus_a": (1,), "plus_ab": (1, 2)}[variant]
    return Pattern((1, 2, 3) * t + suffix)


def alternation_family(n: int, t: int, variant: str = "plain") -> ConstructionResult:
    """Greedy-shaped saturated sequences for ``(abc)^t``, ``(abc)^t a``, ``(abc)^t ab``."""
    if variant not in _VARIANTS:
        raise BadParameters(f"variant must be one of {_VARIANTS}")
    if n < 4 or t < 2:
        raise BadParameters("need n >= 4 and t >= 2")
    u = alternation_pattern(t, variant)
    if variant == "plain":
        letters = []
        for k in range(n, 2, -1):
            letters += [1, 2, k] * (t - 1)
        letters += [1, 2]
        predicted = 3 * (t - 1) * (n - 2) + 2
    elif variant == "plus_a":
        letters = _chain([1, 2, 3] * t, list(range(n, 2, -1)) + [1, 2])
        predicted = 3 * t + (n - 3) * (3 * t - 2)
    else:
        letters = _chain([1, 2, 3] * t + [1], [n - 1, n] + list(range(n - 2, 0, -1)))
        predicted = 3 * t + 1 + (n - 3) * (3 * t - 1)
    return _result(letters, n, u, f"alternation-{variant}", predicted, t=t)


def closed_form_abcacbc(n: int) -> ConstructionResult:
    """``1,2,n, 1,2,n-1, ..., 1,2,3, 1,2,3, 1,2, n, n-1, ..., 4, 6, 7, ..., n``."""
    if n < 6:
        raise BadParameters("need n >= 6")
    letters = []
    for k in range(n, 2, -1):
        letters += [1, 2, k]
    letters += [1, 2, 3, 1, 2]
    letters += list(range(n, 3, -1))
    letters += list(range(6, n + 1))
    return _result(letters, n, Pattern((1, 2, 3, 1, 3, 2, 3)), "abcacbc", 5 * n - 9)


def sparse_and_free(seq, u) -> bool:
    u = _as_pattern(u)
    return is_r_sparse(seq, u.r) and contains(seq, u) is None
