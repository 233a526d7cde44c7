# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: GF(p) dense rank and the Hochster subset scan.

Faces are 64-bit vertex masks, so graphs are limited to 64 vertices.
Subsets whose boundary matrices would exceed the entry limit are handed
back to the caller instead of being computed here.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport free, malloc, qsort, realloc
from libc.string cimport memset

cnp.import_array()

cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil

cdef enum:
    MAXV = 64

cdef Py_ssize_t _max_entries = 1 << 22


def set_max_entries(Py_ssize_t limit):
    """Change the per-matrix size limit and return the old one (for tests)."""
    global _max_entries
    old = _max_entries
    _max_entries = limit
    return old


cdef struct Workspace:
    uint64_t* faces[MAXV]
    Py_ssize_t size[MAXV]
    Py_ssize_t cap[MAXV]
    int64_t* mat
    Py_ssize_t mat_cap
    int top


cdef int _ws_init(Workspace* ws) noexcept nogil:
    cdef int d
    for d in range(MAXV):
        ws.faces[d] = NULL
        ws.size[d] = 0
        ws.cap[d] = 0
    ws.mat = NULL
    ws.mat_cap = 0
    ws.top = -1
    return 0


cdef void _ws_free(Workspace* ws) noexcept nogil:
    cdef int d
    for d in range(MAXV):
        free(ws.faces[d])
        ws.faces[d] = NULL
    free(ws.mat)
    ws.mat = NULL


cdef int _push(Workspace* ws, int d, uint64_t face) noexcept nogil:
    cdef Py_ssize_t newcap
    cdef uint64_t* grown
    if ws.size[d] == ws.cap[d]:
        newcap = 64 if ws.cap[d] == 0 else 2 * ws.cap[d]
        if newcap > _max_entries:
            return -1
        grown = <uint64_t*> realloc(ws.faces[d], newcap * sizeof(uint64_t))
        if grown == NULL:
            return -1
        ws.faces[d] = grown
        ws.cap[d] = newcap
    ws.faces[d][ws.size[d]] = face
    ws.size[d] += 1
    if d > ws.top:
        ws.top = d
    return 0


cdef int _extend(Workspace* ws, const uint64_t* nb, uint64_t clique, int size, uint64_t cand) noexcept nogil:
    cdef int v
    if _push(ws, size - 1, clique) != 0:
        return -1
    while cand:
        v = ctz64(cand)
        cand &= cand - 1
        if _extend(ws, nb, clique | (<uint64_t> 1 << v), size + 1, cand & nb[v]) != 0:
            return -1
    return 0


cdef int _cmp_u64(const void* a, const void* b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t*> a)[0]
    cdef uint64_t y = (<const uint64_t*> b)[0]
    return (x > y) - (x < y)


cdef inline Py_ssize_t _find(const uint64_t* arr, Py_ssize_t n, uint64_t key) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = n, mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if arr[mid] < key:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline int64_t _powmod(int64_t b, int64_t e, int64_t p) noexcept nogil:
    cdef int64_t r = 1
    b %= p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef Py_ssize_t _rank_dense(int64_t* a, Py_ssize_t rows, Py_ssize_t cols, int64_t p) noexcept nogil:
    """In-place Gaussian elimination on a row-major matrix with entries in [0, p)."""
    cdef Py_ssize_t r = 0, c, i, k, piv
    cdef int64_t inv, f, t
    cdef int64_t* pr
    cdef int64_t* ai
    for c in range(cols):
        piv = -1
        for i in range(r, rows):
            if a[i * cols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, cols):
                t = a[piv * cols + k]
                a[piv * cols + k] = a[r * cols + k]
                a[r * cols + k] = t
        pr = a + r * cols
        inv = _powmod(pr[c], p - 2, p)
        for k in range(c, cols):
            pr[k] = pr[k] * inv % p
        for i in range(r + 1, rows):
            ai = a + i * cols
            f = ai[c]
            if f != 0:
                for k in range(c, cols):
                    if pr[k] != 0:
                        ai[k] = (ai[k] - f * pr[k]) % p
                        if ai[k] < 0:
                            ai[k] += p
        r += 1
        if r == rows:
            break
    return r


cdef Py_ssize_t _boundary_rank(Workspace* ws, int d, int64_t p) noexcept nogil:
    """Rank of the d-th boundary map, built with one row per d-face."""
    cdef Py_ssize_t rows = ws.size[d], cols = ws.size[d - 1], need, i, idx
    cdef int k, v
    cdef uint64_t face, rest
    cdef int64_t* grown
    cdef int64_t* row
    if rows == 0 or cols == 0:
        return 0
    need = rows * cols
    if need > _max_entries:
        return -1
    if need > ws.mat_cap:
        grown = <int64_t*> realloc(ws.mat, need * sizeof(int64_t))
        if grown == NULL:
            return -1
        ws.mat = grown
        ws.mat_cap = need
    memset(ws.mat, 0, need * sizeof(int64_t))
    for i in range(rows):
        face = ws.faces[d][i]
        row = ws.mat + i * cols
        rest = face
        k = 0
        while rest:
            v = ctz64(rest)
            rest &= rest - 1
            idx = _find(ws.faces[d - 1], cols, face ^ (<uint64_t> 1 << v))
            row[idx] = p - 1 if k & 1 else 1
            k += 1
    return _rank_dense(ws.mat, rows, cols, p)


cdef int _subset_dims(Workspace* ws, const uint64_t* cnbrs, uint64_t mask, int64_t p, int64_t* dims) noexcept nogil:
    """Reduced homology in degrees 0..j-2 of the flag complex on ``mask``."""
    cdef uint64_t nb[MAXV]
    cdef Py_ssize_t ranks[MAXV + 2]
    cdef Py_ssize_t r
    cdef int j = popcount64(mask), v, d, top
    cdef uint64_t rest = mask, higher
    for d in range(j + 1):
        dims[d] = 0
    while rest:
        v = ctz64(rest)
        rest &= rest - 1
        nb[v] = cnbrs[v] & mask
        if (nb[v] | (<uint64_t> 1 << v)) == mask:
            return 0
    for d in range(MAXV):
        ws.size[d] = 0
    ws.top = -1
    rest = mask
    while rest:
        v = ctz64(rest)
        rest &= rest - 1
        higher = 0 if v == 63 else ~((<uint64_t> 2 << v) - 1)
        if _extend(ws, nb, <uint64_t> 1 << v, 1, nb[v] & higher) != 0:
            return -1
    top = ws.top
    for d in range(top + 1):
        qsort(ws.faces[d], ws.size[d], sizeof(uint64_t), _cmp_u64)
    for d in range(MAXV + 2):
        ranks[d] = 0
    ranks[0] = 1
    for d in range(1, top + 1):
        r = _boundary_rank(ws, d, p)
        if r < 0:
            return -1
        ranks[d] = r
    for d in range(j - 1):
        dims[d] = (ws.size[d] if d <= top else 0) - ranks[d] - ranks[d + 1]
    return 0


def hochster_scan(cnp.ndarray cnbrs_in, int n, object start, object stop, long long p):
    """Sum reduced homology over subsets with masks in [start, stop) into table[i][j].

    Returns ``(table, failed)`` where ``failed`` lists subset masks whose
    matrices exceeded the dense size limit and still need computing.
    """
    if n > MAXV:
        raise ValueError("compiled kernel supports at most 64 vertices")
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] cn = np.ascontiguousarray(cnbrs_in, dtype=np.uint64)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] table = np.zeros((n + 1, n + 1), dtype=np.int64)
    cdef uint64_t lo = max(<uint64_t> start, 1), hi = <uint64_t> stop, mask
    cdef int64_t dims[MAXV + 1]
    cdef int j, d, rc
    cdef Workspace ws
    cdef const uint64_t* cp = <const uint64_t*> cn.data
    cdef int64_t* tp = <int64_t*> table.data
    cdef uint64_t* failed = NULL
    cdef Py_ssize_t nfailed = 0, fcap = 0
    cdef uint64_t* fgrown
    _ws_init(&ws)
    with nogil:
        mask = lo
        while mask < hi:
            j = popcount64(mask)
            rc = _subset_dims(&ws, cp, mask, p, dims)
            if rc == 0:
                for d in range(j - 1):
                    if dims[d]:
                        tp[(j - d - 1) * (n + 1) + j] += dims[d]
            else:
                if nfailed == fcap:
                    fcap = 16 if fcap == 0 else 2 * fcap
                    fgrown = <uint64_t*> realloc(failed, fcap * sizeof(uint64_t))
                    if fgrown != NULL:
                        failed = fgrown
                if nfailed < fcap:
                    failed[nfailed] = mask
                    nfailed += 1
            mask += 1
        _ws_free(&ws)
    out = [int(failed[i]) for i in range(nfailed)]
    free(failed)
    return table, out


def subset_profile(cnp.ndarray cnbrs_in, object mask, long long p):
    """Reduced homology in degrees 0..j-2 for one subset, or None if oversized."""
    cdef cnp.ndarray[cnp.uint64_t, ndim=1] cn = np.ascontiguousarray(cnbrs_in, dtype=np.uint64)
    cdef uint64_t m = <uint64_t> mask
    cdef int64_t dims[MAXV + 1]
    cdef Workspace ws
    cdef int j = popcount64(m), rc
    _ws_init(&ws)
    rc = _subset_dims(&ws, <const uint64_t*> cn.data, m, p, dims)
    _ws_free(&ws)
    if rc != 0:
        return None
    return tuple(int(dims[d]) for d in range(j - 1))


def rank_mod_p(a_in, long long p):
    """Rank over GF(p) of a dense integer matrix (copied, entries reduced mod p)."""
    cdef cnp.ndarray[cnp.int64_t, ndim=2] a = np.ascontiguousarray(np.mod(np.asarray(a_in, dtype=np.int64), p))
    cdef Py_ssize_t rows = a.shape[0], cols = a.shape[1], r
    if rows == 0 or cols == 0:
        return 0
    with nogil:
        r = _rank_dense(<int64_t*> a.data, rows, cols, p)
    return int(r)
