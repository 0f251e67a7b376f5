# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: degree census for spider recognition and the 5-subset P4 scan.

Each function mirrors one in ``_pykernels`` and must return identical values.
"""

import numpy as np

from libc.stdint cimport int32_t, int64_t, uint64_t


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef Py_ssize_t _find(const int64_t[::1] arr, int64_t key) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = arr.shape[0], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    if lo < arr.shape[0] and arr[lo] == key:
        return lo
    return -1


cdef object _degree_hist(const int64_t[::1] indptr):
    cdef Py_ssize_t n = indptr.shape[0] - 1, v
    cdef int64_t d
    hist = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] h = hist
    with nogil:
        for v in range(n):
            d = indptr[v + 1] - indptr[v]
            if 0 <= d <= n:
                h[d] += 1
    return hist


cdef object _collect(const int64_t[::1] indptr, int64_t deg, int64_t count):
    cdef Py_ssize_t n = indptr.shape[0] - 1, v, j = 0
    out = np.empty(count, dtype=np.int64)
    cdef int64_t[::1] o = out
    with nogil:
        for v in range(n):
            if indptr[v + 1] - indptr[v] == deg:
                o[j] = v
                j += 1
    return out


def thin_census(const int64_t[::1] indptr, const int32_t[::1] indices):
    """Thin-spider body/leg census.

    Returns ``(body, legs, partner)`` with ``partner[i]`` the leg of
    ``body[i]``, or ``None`` when the degree counts rule out a thin spider.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1, i, pos
    if n < 4:
        return None
    hist = _degree_hist(indptr)
    cdef int64_t s = hist[1]
    cdef int64_t t = n - s
    if s < 2 or t < 2 or hist[t] != s:
        return None
    body = _collect(indptr, t, s)
    legs = _collect(indptr, 1, s)
    partner = np.full(s, -1, dtype=np.int64)
    cdef const int64_t[::1] b = body
    cdef const int64_t[::1] lg = legs
    cdef int64_t[::1] p = partner
    for i in range(s):
        pos = _find(b, indices[indptr[lg[i]]])
        if pos < 0 or p[pos] != -1:
            raise RuntimeError("leg neighbourhoods inconsistent with a thin spider; adjacency corrupt")
        p[pos] = lg[i]
    return body, legs, partner


def thick_census(const int64_t[::1] indptr, const int32_t[::1] indices):
    """Thick-spider clique/stable census, read directly off the degrees of ``g``.

    Returns ``(clique, stable, partner)`` with ``partner[i]`` the unique
    non-neighbour of ``clique[i]`` inside ``stable``, or ``None``.
    """
    cdef Py_ssize_t n = indptr.shape[0] - 1, i, pos
    cdef int64_t k, e, missing, total
    if n < 4:
        return None
    hist = _degree_hist(indptr)
    cdef int64_t s = hist[n - 2]
    if s < 2 or n - s < 2 or hist[s - 1] != s:
        return None
    clique = _collect(indptr, n - 2, s)
    stable = _collect(indptr, s - 1, s)
    partner = np.full(s, -1, dtype=np.int64)
    cdef const int64_t[::1] c = clique
    cdef const int64_t[::1] st = stable
    cdef int64_t[::1] p = partner
    cdef char[::1] used = np.zeros(s, dtype=np.int8)
    total = <int64_t>n * (n - 1) // 2
    for i in range(s):
        k = c[i]
        missing = total - k
        for e in range(indptr[k], indptr[k + 1]):
            missing -= indices[e]
        pos = _find(st, missing)
        if pos < 0 or used[pos]:
            raise RuntimeError("clique non-neighbours inconsistent with a thick spider; adjacency corrupt")
        used[pos] = 1
        p[i] = missing
    return clique, stable, partner


cdef inline bint _is_p4(const uint64_t[::1] masks, int a, int b, int c, int d) noexcept nogil:
    cdef uint64_t sub = (1ULL << a) | (1ULL << b) | (1ULL << c) | (1ULL << d)
    cdef int da = __builtin_popcountll(masks[a] & sub)
    cdef int db = __builtin_popcountll(masks[b] & sub)
    cdef int dc = __builtin_popcountll(masks[c] & sub)
    cdef int dd = __builtin_popcountll(masks[d] & sub)
    # three edges with no isolated and no degree-3 vertex is exactly a P4
    if da + db + dc + dd != 6:
        return False
    return 1 <= da <= 2 and 1 <= db <= 2 and 1 <= dc <= 2 and 1 <= dd <= 2


def first_p4_violation(const uint64_t[::1] masks):
    """Lexicographically first 5-subset inducing two or more P4s, or ``None``.

    ``masks[v]`` is the neighbourhood bitmask of ``v``; at most 64 vertices.
    """
    cdef int n = masks.shape[0]
    cdef int a, b, c, d, e, cnt
    if n > 64:
        raise ValueError("bitmask kernel supports at most 64 vertices")
    for a in range(n):
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                for d in range(c + 1, n):
                    for e in range(d + 1, n):
                        cnt = _is_p4(masks, b, c, d, e) + _is_p4(masks, a, c, d, e)
                        if cnt < 2:
                            cnt += _is_p4(masks, a, b, d, e)
                        if cnt < 2:
                            cnt += _is_p4(masks, a, b, c, e)
                        if cnt < 2:
                            cnt += _is_p4(masks, a, b, c, d)
                        if cnt >= 2:
                            return (a, b, c, d, e)
    return None
