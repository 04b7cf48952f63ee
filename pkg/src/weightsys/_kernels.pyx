# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see _kernels_py for the contract and conventions."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset


def face_count(alpha):
    cdef int n = len(alpha)
    cdef int *a
    cdef char *seen
    cdef int i, d, x, start
    cdef int faces = 0
    if n == 0:
        return 0
    a = <int *> malloc(n * sizeof(int))
    seen = <char *> malloc(n)
    if a == NULL or seen == NULL:
        free(a)
        free(seen)
        raise MemoryError()
    for i in range(n):
        a[i] = alpha[i]
    memset(seen, 0, n)
    for start in range(n):
        if seen[start]:
            continue
        faces += 1
        d = start
        while not seen[d]:
            seen[d] = 1
            x = a[d]
            d = x - 2 if x % 3 == 2 else x + 1
    free(a)
    free(seen)
    return faces


def marking_scan(alpha, int v):
    cdef int n = 3 * v
    cdef int b_top = v // 2 + 2
    cdef int nb = b_top + 1
    cdef long long *signed_by_b
    cdef int *a
    cdef int *tau
    cdef char *seen
    cdef long long spherical = 0
    cdef long long spherical_signed = 0
    cdef unsigned long long mask, nmask, m
    cdef int i, o, d, x, start, faces, sign, bits
    cdef char reached[32]
    cdef int stack[32]
    cdef int top, count, j
    if len(alpha) != n:
        raise ValueError("alpha length does not match vertex count")
    if v > 28:
        raise ValueError("marking scan capped at v = 28")
    signed_by_b = <long long *> malloc(nb * sizeof(long long))
    a = <int *> malloc(n * sizeof(int))
    tau = <int *> malloc(n * sizeof(int))
    seen = <char *> malloc(n)
    if signed_by_b == NULL or a == NULL or tau == NULL or seen == NULL:
        free(signed_by_b)
        free(a)
        free(tau)
        free(seen)
        raise MemoryError()
    for i in range(n):
        a[i] = alpha[i]
        tau[i] = i
    for i in range(nb):
        signed_by_b[i] = 0
    # signed_by_b is sized by the connected-graph Euler bound, so a
    # disconnected pairing must be rejected before the unchecked writes.
    if v > 0:
        memset(reached, 0, v)
        reached[0] = 1
        stack[0] = 0
        top = 1
        count = 1
        while top:
            top -= 1
            i = stack[top]
            for d in range(3 * i, 3 * i + 3):
                j = a[d] / 3
                if not reached[j]:
                    reached[j] = 1
                    count += 1
                    stack[top] = j
                    top += 1
        if count != v:
            free(signed_by_b)
            free(a)
            free(tau)
            free(seen)
            raise ValueError("marking scan requires a connected pairing")
    nmask = (<unsigned long long> 1) << v
    for mask in range(nmask):
        for i in range(v):
            o = 3 * i
            if (mask >> i) & 1:
                tau[o + 1] = o + 2
                tau[o + 2] = o + 1
            else:
                tau[o + 1] = o + 1
                tau[o + 2] = o + 2
        memset(seen, 0, n)
        faces = 0
        for start in range(n):
            if seen[start]:
                continue
            faces += 1
            d = start
            while not seen[d]:
                seen[d] = 1
                x = tau[a[tau[d]]]
                d = x - 2 if x % 3 == 2 else x + 1
        m = mask
        bits = 0
        while m:
            bits += m & 1
            m >>= 1
        sign = -1 if bits & 1 else 1
        signed_by_b[faces] += sign
        if faces == b_top:
            spherical += 1
            spherical_signed += sign
    out = [signed_by_b[i] for i in range(nb)]
    free(signed_by_b)
    free(a)
    free(tau)
    free(seen)
    return out, spherical, spherical_signed


cdef bint _leaf_connected(int *mate, int v) noexcept:
    cdef char reached[32]
    cdef int stack[32]
    cdef int top = 0
    cdef int count = 1
    cdef int i, d, j
    memset(reached, 0, v)
    reached[0] = 1
    stack[top] = 0
    top += 1
    while top:
        top -= 1
        i = stack[top]
        for d in range(3 * i, 3 * i + 3):
            j = mate[d] / 3
            if not reached[j]:
                reached[j] = 1
                count += 1
                stack[top] = j
                top += 1
    return count == v


cdef void _census_rec(int free_from, int n, int v, bint allow_loops,
                      int *mate, long long *acc) noexcept:
    cdef int d = free_from
    cdef int dd
    while d < n and mate[d] != -1:
        d += 1
    if d == n:
        acc[0] += 1
        if _leaf_connected(mate, v):
            acc[1] += 1
        return
    for dd in range(d + 1, n):
        if mate[dd] != -1:
            continue
        if not allow_loops and dd / 3 == d / 3:
            continue
        mate[d] = dd
        mate[dd] = d
        _census_rec(d + 1, n, v, allow_loops, mate, acc)
        mate[d] = -1
        mate[dd] = -1


def pairing_census(int v, bint allow_loops):
    cdef int n = 3 * v
    cdef int mate[96]
    cdef long long acc[2]
    cdef int i
    if v == 0:
        return 1, 1
    if v > 32:
        raise ValueError("pairing census capped at v = 32")
    for i in range(n):
        mate[i] = -1
    acc[0] = 0
    acc[1] = 0
    _census_rec(0, n, v, allow_loops, mate, acc)
    return acc[0], acc[1]
