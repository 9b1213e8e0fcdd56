"""Pure-Python matcher kernels.

Reference implementation of the hot loops; the Cython module ``_ckernels``
exposes the same four functions.  Everything here is 0-based and works on
plain sequences of positive ints.
"""

BACKEND = "python"


def _match(seq, pat, k=-1, pos=-1):
    """Backtracking search for a copy of ``pat`` in ``seq``.

    Pattern letters are bound to sequence letters on first use, trying
    sequence letters in increasing order; each binding takes the leftmost
    admissible occurrence, which is complete because for a fixed binding
    greedy leftmost matching finds an embedding whenever one exists.  When
    ``k >= 0`` the pattern position ``k`` is pinned to ``seq[pos]``.
    Returns the list of matched positions or None.
    """
    L = len(seq)
    l = len(pat)
    if l > L:
        return None
    bind = {}
    used = set()
    out = [0] * l
    if k >= 0:
        bind[pat[k]] = seq[pos]
        used.add(seq[pos])
        out[k] = pos
    # need[i]: occurrences of pat[i] still required inside its segment
    need = []
    for i, p in enumerate(pat):
        end = k if 0 <= k and i < k else l
        need.append(pat[i:end].count(p))

    def rec(i, ptr):
        if i == l:
            return True
        if i == k:
            return rec(i + 1, pos + 1)
        hi = pos if i < k else L
        p = pat[i]
        c = bind.get(p)
        if c is not None:
            for q in range(ptr, hi):
                if seq[q] == c:
                    out[i] = q
                    return rec(i + 1, q + 1)
            return False
        first = {}
        count = {}
        for q in range(ptr, hi):
            x = seq[q]
            if x in used:
                continue
            if x not in first:
                first[x] = q
                count[x] = 1
            else:
                count[x] += 1
        for x in sorted(first):
            if count[x] < need[i]:
                continue
            bind[p] = x
            used.add(x)
            out[i] = first[x]
            if rec(i + 1, first[x] + 1):
                return True
            del bind[p]
            used.discard(x)
        return False

    return out if rec(0, 0) else None


def find_copy(seq, pat):
    out = _match(list(seq), list(pat))
    return None if out is None else tuple(out)


def copy_through(seq, pat, pos):
    seq = list(seq)
    pat = list(pat)
    L, l = len(seq), len(pat)
    for k in range(l):
        # prefix pat[:k] must fit before pos, suffix after it
        if k > pos or l - k - 1 > L - pos - 1:
            continue
        if _match(seq, pat, k, pos) is not None:
            return True
    return False


def is_sparse(seq, r):
    seq = list(seq)
    for i in range(len(seq)):
        if seq[i] in seq[max(0, i - r + 1):i]:
            return False
    return True


def first_insertion(seq, pat, r, n):
    """Least (letter, gap) whose insertion keeps r-sparsity and adds no copy.

    Candidates are ordered by letter, then by gap; gap g places the letter
    before ``seq[g]``.  Assumes ``seq`` itself is r-sparse.
    """
    seq = list(seq)
    L = len(seq)
    for x in range(1, n + 1):
        for g in range(L + 1):
            if x in seq[max(0, g - r + 1):g] or x in seq[g:g + r - 1]:
                continue
            if not copy_through(seq[:g] + [x] + seq[g:], pat, g):
                return (x, g)
    return None
