# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled similarity kernels.

Mirrors `upsum._kernels_py` exactly (same matching rules, same order of
floating-point operations) so the two backends are interchangeable.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset


cdef double _jaro(unicode a, unicode b) except -2.0:
    cdef Py_ssize_t la = len(a), lb = len(b)
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    cdef Py_ssize_t window = (la if la > lb else lb) // 2 - 1
    if window < 0:
        window = 0

    cdef unsigned char* flags = <unsigned char*> malloc(la + lb)
    if flags == NULL:
        raise MemoryError()
    memset(flags, 0, la + lb)
    cdef unsigned char* a_flags = flags
    cdef unsigned char* b_flags = flags + la

    cdef Py_ssize_t i, j, lo, hi, matches = 0
    cdef Py_UCS4 ca
    for i in range(la):
        ca = a[i]
        lo = i - window if i > window else 0
        hi = i + window if i + window < lb else lb - 1
        for j in range(lo, hi + 1):
            if b_flags[j] == 0 and b[j] == ca:
                a_flags[i] = 1
                b_flags[j] = 1
                matches += 1
                break
    if matches == 0:
        free(flags)
        return 0.0

    cdef Py_ssize_t half = 0, k = 0
    for i in range(la):
        if a_flags[i]:
            while b_flags[k] == 0:
                k += 1
            if a[i] != b[k]:
                half += 1
            k += 1
    free(flags)
    cdef Py_ssize_t t = half // 2
    return ((<double> matches) / la
            + (<double> matches) / lb
            + (<double> (matches - t)) / matches) / 3.0


cdef double _jaro_winkler(unicode a, unicode b) except -2.0:
    cdef double j = _jaro(a, b)
    if j == 1.0:
        return 1.0
    cdef Py_ssize_t limit = len(a)
    if len(b) < limit:
        limit = len(b)
    if limit > 4:
        limit = 4
    cdef Py_ssize_t prefix = 0
    while prefix < limit and a[prefix] == b[prefix]:
        prefix += 1
    return j + prefix * 0.1 * (1.0 - j)


def jaro(unicode a, unicode b):
    """Jaro similarity between two strings (see the pure-Python twin)."""
    return _jaro(a, b)


def jaro_winkler(unicode a, unicode b):
    """Jaro with the Winkler prefix bonus: j + l*0.1*(1-j), prefix l <= 4."""
    return _jaro_winkler(a, b)


def jw_extended(sentence_tokens, query_tokens):
    """Average best Jaro-Winkler match of each query term in the sentence.

    Greedy, without replacement, in query order; consumed sentence terms
    (distinct, first occurrence wins ties) leave the pool and exhausted
    pools contribute 0 for the remaining query terms.
    """
    cdef Py_ssize_t nq = len(query_tokens)
    if nq == 0:
        return 0.0
    cdef list pool = []
    seen = set()
    for t in sentence_tokens:
        if t not in seen:
            seen.add(t)
            pool.append(t)
    cdef Py_ssize_t npool = len(pool)
    if npool == 0:
        return 0.0

    cdef unsigned char* used = <unsigned char*> malloc(npool)
    if used == NULL:
        raise MemoryError()
    memset(used, 0, npool)
    cdef Py_ssize_t remaining = npool, i, best_i
    cdef double total = 0.0, best, score
    try:
        for q in query_tokens:
            if remaining == 0:
                break
            best = -1.0
            best_i = -1
            for i in range(npool):
                if used[i]:
                    continue
                score = _jaro_winkler(q, pool[i])
                if score > best:
                    best = score
                    best_i = i
            used[best_i] = 1
            remaining -= 1
            total += best
    finally:
        free(used)
    return total / nq


cdef Py_ssize_t _lcs_length_ids(Py_ssize_t* ia, Py_ssize_t n,
                                Py_ssize_t* ib, Py_ssize_t m,
                                Py_ssize_t* row) noexcept nogil:
    cdef Py_ssize_t i, j, best = 0, diag, tmp
    memset(row, 0, m * sizeof(Py_ssize_t))
    for i in range(n):
        diag = 0
        for j in range(m):
            tmp = row[j]
            if ia[i] == ib[j]:
                row[j] = diag + 1
                if row[j] > best:
                    best = row[j]
            else:
                row[j] = 0
            diag = tmp
    return best


cdef int _denom_mode(denominator) except -1:
    if denominator == "min":
        return 0
    if denominator == "max":
        return 1
    if denominator == "mean":
        return 2
    raise ValueError(
        f"denominator must be one of ('min', 'max', 'mean'), got {denominator!r}")


cdef double _denom_value(Py_ssize_t n, Py_ssize_t m, int mode) noexcept nogil:
    if mode == 0:
        return <double> (n if n < m else m)
    if mode == 1:
        return <double> (n if n > m else m)
    return (n + m) / 2.0


cdef Py_ssize_t _encode_new(list ids_tokens, dict ids, Py_ssize_t* out) except -1:
    # Assign dense ids to unseen tokens (used for the first operand).
    cdef Py_ssize_t i, n = len(ids_tokens)
    for i in range(n):
        t = ids_tokens[i]
        v = ids.get(t)
        if v is None:
            v = len(ids)
            ids[t] = v
        out[i] = <Py_ssize_t> v
    return n


cdef Py_ssize_t _encode_known(tokens, dict ids, Py_ssize_t* out) except -1:
    # Map tokens through an existing id table; unknown tokens get -1, which
    # can never match a first-operand id.
    cdef Py_ssize_t j = 0
    for t in tokens:
        v = ids.get(t)
        out[j] = -1 if v is None else <Py_ssize_t> v
        j += 1
    return j


def lcs_length(a, b):
    """Length of the longest contiguous run of tokens common to a and b."""
    cdef Py_ssize_t n = len(a), m = len(b)
    if n == 0 or m == 0:
        return 0
    cdef Py_ssize_t* buf = <Py_ssize_t*> malloc((n + 2 * m) * sizeof(Py_ssize_t))
    if buf == NULL:
        raise MemoryError()
    cdef dict ids = {}
    cdef Py_ssize_t best
    try:
        _encode_new(list(a), ids, buf)
        _encode_known(b, ids, buf + n)
        with nogil:
            best = _lcs_length_ids(buf, n, buf + n, m, buf + n + m)
    finally:
        free(buf)
    return best


def lcs_norm(a, b, denominator="min"):
    """Longest common token run divided by the chosen length denominator."""
    cdef int mode = _denom_mode(denominator)
    cdef Py_ssize_t n = len(a), m = len(b)
    if n == 0 or m == 0:
        return 0.0
    return lcs_length(a, b) / _denom_value(n, m, mode)


def max_lcs_norm(tokens, others, denominator="min"):
    """Maximum lcs_norm(tokens, o) over a collection; 0.0 when it is empty."""
    cdef int mode = _denom_mode(denominator)
    cdef Py_ssize_t n = len(tokens)
    cdef list other_lists = list(others)
    cdef Py_ssize_t count = len(other_lists)
    if count == 0:
        return 0.0

    cdef Py_ssize_t max_m = 0, m, i
    for i in range(count):
        m = len(other_lists[i])
        if m > max_m:
            max_m = m
    if n == 0 or max_m == 0:
        return 0.0

    cdef Py_ssize_t* buf = <Py_ssize_t*> malloc((n + 2 * max_m) * sizeof(Py_ssize_t))
    if buf == NULL:
        raise MemoryError()
    cdef dict ids = {}
    cdef double best = 0.0, value
    cdef Py_ssize_t run
    try:
        _encode_new(list(tokens), ids, buf)
        for i in range(count):
            other = other_lists[i]
            m = len(other)
            if m == 0:
                continue
            _encode_known(other, ids, buf + n)
            with nogil:
                run = _lcs_length_ids(buf, n, buf + n, m, buf + n + max_m)
            value = run / _denom_value(n, m, mode)
            if value > best:
                best = value
                if best == 1.0:
                    break
    finally:
        free(buf)
    return best
