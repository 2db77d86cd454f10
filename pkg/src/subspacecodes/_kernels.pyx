# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled GF(2) kernels over bit-packed rows (n <= 64).

Mirror of _kernels_py with the same public API; selected automatically by
subspacecodes.kernels when the extension built.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

COMPILED = True

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil


cdef inline int _rank(unsigned long long* rows, int m) nogil:
    cdef unsigned long long lead[64]
    cdef unsigned long long v
    cdef int i, b, r = 0
    memset(lead, 0, sizeof(lead))
    for i in range(m):
        v = rows[i]
        while v:
            b = 63 - __builtin_clzll(v)
            if lead[b]:
                v ^= lead[b]
            else:
                lead[b] = v
                r += 1
                break
    return r


def gf2_rank(rows):
    """Rank of packed GF(2) rows."""
    cdef int m = len(rows)
    if m == 0:
        return 0
    cdef unsigned long long* buf = <unsigned long long*> malloc(m * sizeof(unsigned long long))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(m):
        buf[i] = <unsigned long long> rows[i]
    cdef int r = _rank(buf, m)
    free(buf)
    return r


cdef int _load_code(ids, gens, unsigned long long** ids_out,
                    unsigned long long** rows_out, int** ks_out, int* kmax_out) except -1:
    cdef int n = len(ids)
    cdef int kmax = 0, i, j, k
    for i in range(n):
        k = len(gens[i])
        if k > kmax:
            kmax = k
    if kmax == 0:
        kmax = 1
    cdef unsigned long long* ids_a = <unsigned long long*> malloc(n * sizeof(unsigned long long))
    cdef unsigned long long* rows_a = <unsigned long long*> malloc(n * kmax * sizeof(unsigned long long))
    cdef int* ks_a = <int*> malloc(n * sizeof(int))
    if ids_a == NULL or rows_a == NULL or ks_a == NULL:
        free(ids_a); free(rows_a); free(ks_a)
        raise MemoryError()
    memset(rows_a, 0, n * kmax * sizeof(unsigned long long))
    for i in range(n):
        ids_a[i] = <unsigned long long> ids[i]
        g = gens[i]
        k = len(g)
        ks_a[i] = k
        for j in range(k):
            rows_a[i * kmax + j] = <unsigned long long> g[j]
    ids_out[0] = ids_a
    rows_out[0] = rows_a
    ks_out[0] = ks_a
    kmax_out[0] = kmax
    return 0


def code_min_distance(ids, gens):
    """Minimum subspace distance over all unordered pairs of packed words."""
    cdef int nwords = len(ids)
    cdef unsigned long long* ids_a
    cdef unsigned long long* rows_a
    cdef int* ks_a
    cdef int kmax
    _load_code(ids, gens, &ids_a, &rows_a, &ks_a, &kmax)

    cdef unsigned long long buf[128]
    cdef int best = 1 << 30
    cdef int i, j, t, s, d, ki, kj
    cdef unsigned long long idi
    with nogil:
        for i in range(nwords):
            idi = ids_a[i]
            ki = ks_a[i]
            for j in range(i + 1, nwords):
                s = __builtin_popcountll(idi ^ ids_a[j])
                if s >= best:
                    continue
                kj = ks_a[j]
                if s == 0:
                    for t in range(ki):
                        buf[t] = rows_a[i * kmax + t] ^ rows_a[j * kmax + t]
                    d = 2 * _rank(buf, ki)
                else:
                    for t in range(ki):
                        buf[t] = rows_a[i * kmax + t]
                    for t in range(kj):
                        buf[ki + t] = rows_a[j * kmax + t]
                    d = 2 * _rank(buf, ki + kj) - ki - kj
                if d < best:
                    best = d
    free(ids_a); free(rows_a); free(ks_a)
    return best


def nearest(qid, qrows, ids, gens):
    """Index and distance of the first closest word to the packed query."""
    cdef int nwords = len(ids)
    cdef unsigned long long* ids_a
    cdef unsigned long long* rows_a
    cdef int* ks_a
    cdef int kmax
    _load_code(ids, gens, &ids_a, &rows_a, &ks_a, &kmax)

    cdef int kq = len(qrows)
    cdef unsigned long long q[64]
    cdef unsigned long long qid_c = <unsigned long long> qid
    cdef int t
    for t in range(kq):
        q[t] = <unsigned long long> qrows[t]

    cdef unsigned long long buf[128]
    cdef int best_d = 1 << 30
    cdef int best_i = -1
    cdef int i, s, d, ki
    with nogil:
        for i in range(nwords):
            s = __builtin_popcountll(qid_c ^ ids_a[i])
            if s >= best_d:
                continue
            ki = ks_a[i]
            if s == 0:
                for t in range(kq):
                    buf[t] = q[t] ^ rows_a[i * kmax + t]
                d = 2 * _rank(buf, kq)
            else:
                for t in range(kq):
                    buf[t] = q[t]
                for t in range(ki):
                    buf[kq + t] = rows_a[i * kmax + t]
                d = 2 * _rank(buf, kq + ki) - kq - ki
            if d < best_d:
                best_d = d
                best_i = i
    free(ids_a); free(rows_a); free(ks_a)
    return best_i, best_d
