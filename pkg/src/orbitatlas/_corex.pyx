# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled elimination kernel: rank of an integer matrix mod a word-size prime.

Works in place on a C-contiguous int64 buffer whose entries are already
reduced into [0, p).  p must satisfy p < 2**31 so products fit in int64.
"""


cdef long long _powmod(long long b, long long e, long long p):
    cdef long long r = 1
    b %= p
    while e > 0:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


def rank_mod_p(long long[:, ::1] a, long long p):
    """Rank of `a` over GF(p); destroys the buffer."""
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = a.shape[1]
    cdef Py_ssize_t rank = 0, i, j, col, piv
    cdef long long inv, f, v

    col = 0
    while col < m and rank < n:
        piv = -1
        for i in range(rank, n):
            if a[i, col] != 0:
                piv = i
                break
        if piv < 0:
            col += 1
            continue
        if piv != rank:
            for j in range(col, m):
                v = a[rank, j]
                a[rank, j] = a[piv, j]
                a[piv, j] = v
        inv = _powmod(a[rank, col], p - 2, p)
        for i in range(rank + 1, n):
            f = a[i, col]
            if f == 0:
                continue
            f = (f * inv) % p
            a[i, col] = 0
            for j in range(col + 1, m):
                if a[rank, j] != 0:
                    a[i, j] = (a[i, j] - f * a[rank, j]) % p
        rank += 1
        col += 1
    return rank
