# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled matcher kernels; same contract as ``_pykernels``."""

from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memset

BACKEND = "cython"


cdef struct Work:
    int *seq
    int L
    int *pat
    int l
    int k
    int pos
    int maxc
    int *bind      # pattern letter -> sequence letter (0 = unbound)
    char *used     # sequence letter already bound
    int *out
    int *need
    int *first     # per level, maxc + 1 entries
    int *count     # per level, maxc + 1 entries


cdef bint _rec(Work *w, int i, int ptr) noexcept nogil:
    cdef int hi, p, b, q, x
    cdef int *first
    cdef int *count
    if i == w.l:
        return True
    if i == w.k:
        return _rec(w, i + 1, w.pos + 1)
    hi = w.pos if i < w.k else w.L
    p = w.pat[i]
    b = w.bind[p]
    if b:
        q = ptr
        while q < hi:
            if w.seq[q] == b:
                w.out[i] = q
                return _rec(w, i + 1, q + 1)
            q += 1
        return False
    first = w.first + i * (w.maxc + 1)
    count = w.count + i * (w.maxc + 1)
    for x in range(w.maxc + 1):
        first[x] = -1
        count[x] = 0
    for q in range(ptr, hi):
        x = w.seq[q]
        if w.used[x]:
            continue
        if first[x] < 0:
            first[x] = q
        count[x] += 1
    for x in range(1, w.maxc + 1):
        if first[x] < 0 or count[x] < w.need[i]:
            continue
        w.bind[p] = x
        w.used[x] = 1
        w.out[i] = first[x]
        if _rec(w, i + 1, first[x] + 1):
            return True
        w.bind[p] = 0
        w.used[x] = 0
    return False


cdef bint _run(Work *w, int k, int pos) noexcept nogil:
    cdef int i, j, end, c
    w.k = k
    w.pos = pos
    memset(w.bind, 0, (27 + w.l) * sizeof(int))
    memset(w.used, 0, (w.maxc + 1) * sizeof(char))
    for i in range(w.l):
        end = k if (k >= 0 and i < k) else w.l
        c = 0
        for j in range(i, end):
            if w.pat[j] == w.pat[i]:
                c += 1
        w.need[i] = c
    if k >= 0:
        w.bind[w.pat[k]] = w.seq[pos]
        w.used[w.seq[pos]] = 1
        w.out[k] = pos
    return _rec(w, 0, 0)


cdef bint _through(Work *w, int pos) noexcept nogil:
    cdef int k
    for k in range(w.l):
        if k > pos or w.l - k - 1 > w.L - pos - 1:
            continue
        if _run(w, k, pos):
            return True
    return False


cdef int _alloc(Work *w, int cap, list pat, int maxc) except -1:
    cdef int i
    w.l = len(pat)
    w.maxc = maxc
    w.seq = <int *> malloc((cap + 1) * sizeof(int))
    w.pat = <int *> malloc((w.l + 1) * sizeof(int))
    w.bind = <int *> calloc(27 + w.l, sizeof(int))
    w.used = <char *> calloc(maxc + 1, sizeof(char))
    w.out = <int *> malloc((w.l + 1) * sizeof(int))
    w.need = <int *> malloc((w.l + 1) * sizeof(int))
    w.first = <int *> malloc((w.l + 1) * (maxc + 1) * sizeof(int))
    w.count = <int *> malloc((w.l + 1) * (maxc + 1) * sizeof(int))
    if not (w.seq and w.pat and w.bind and w.used and w.out and w.need
            and w.first and w.count):
        _release(w)
        raise MemoryError()
    for i in range(w.l):
        w.pat[i] = pat[i]
    return 0


cdef void _release(Work *w) noexcept:
    free(w.seq)
    free(w.pat)
    free(w.bind)
    free(w.used)
    free(w.out)
    free(w.need)
    free(w.first)
    free(w.count)


cdef int _load(Work *w, list seq) except -1:
    cdef int i
    w.L = len(seq)
    for i in range(w.L):
        w.seq[i] = seq[i]
    return 0


def _check_pattern(list pat):
    if pat and max(pat) > 26:
        raise ValueError("patterns are limited to 26 distinct letters")


def find_copy(seq, pat):
    cdef Work w
    cdef list s = list(seq)
    cdef list p = list(pat)
    cdef bint found
    _check_pattern(p)
    if len(p) > len(s):
        return None
    _alloc(&w, len(s), p, max(s))
    try:
        _load(&w, s)
        found = _run(&w, -1, -1)
        if not found:
            return None
        return tuple(w.out[i] for i in range(w.l))
    finally:
        _release(&w)


def copy_through(seq, pat, int pos):
    cdef Work w
    cdef list s = list(seq)
    cdef list p = list(pat)
    _check_pattern(p)
    if len(p) > len(s):
        return False
    _alloc(&w, len(s), p, max(s))
    try:
        _load(&w, s)
        return bool(_through(&w, pos))
    finally:
        _release(&w)


def is_sparse(seq, int r):
    cdef list s = list(seq)
    cdef int i, j, L = len(s)
    for i in range(L):
        for j in range(max(0, i - r + 1), i):
            if s[j] == s[i]:
                return False
    return True


def first_insertion(seq, pat, int r, int n):
    cdef Work w
    cdef list s = list(seq)
    cdef list p = list(pat)
    cdef int L = len(s)
    cdef int x, g, q, lo, hi
    cdef bint clash
    cdef int *base
    _check_pattern(p)
    _alloc(&w, L + 1, p, max(s + [n]))
    base = <int *> malloc((L + 1) * sizeof(int))
    if not base:
        _release(&w)
        raise MemoryError()
    try:
        for q in range(L):
            base[q] = s[q]
        w.L = L + 1
        for x in range(1, n + 1):
            for g in range(L + 1):
                clash = False
                lo = g - r + 1 if g - r + 1 > 0 else 0
                hi = g + r - 1 if g + r - 1 < L else L
                for q in range(lo, hi):
                    if base[q] == x:
                        clash = True
                        break
                if clash:
                    continue
                if w.l > L + 1:
                    return (x, g)
                for q in range(g):
                    w.seq[q] = base[q]
                w.seq[g] = x
                for q in range(g, L):
                    w.seq[q + 1] = base[q]
                if not _through(&w, g):
                    return (x, g)
        return None
    finally:
        free(base)
        _release(&w)
