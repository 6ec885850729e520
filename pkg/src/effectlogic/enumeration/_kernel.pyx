# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; mirrors ``_pykernel`` cell for cell."""

from libc.string cimport memcpy


cdef enum:
    MAXN = 12
    UNKNOWN = -2
    UNDEF = -1


cdef inline int _sum(int* P, int n, int a, int b) nogil:
    if a < 0:
        return a
    return P[a * n + b]


cdef bint _assoc_ok(int* P, int n) nogil:
    cdef int one = n - 1
    cdef int x, y, z, xy, yz, left, right
    for x in range(1, one):
        for y in range(1, one):
            xy = P[x * n + y]
            if xy == UNKNOWN:
                continue
            for z in range(1, one):
                yz = P[y * n + z]
                if yz == UNKNOWN:
                    continue
                left = _sum(P, n, xy, z)
                if left == UNKNOWN:
                    continue
                right = _sum(P, n, yz, x)
                if right == UNKNOWN:
                    continue
                if left != right:
                    return False
    return True


cdef bint _row_ok(int* P, int n, int x, int v) nogil:
    cdef int y
    for y in range(n):
        if P[x * n + y] == v:
            return False
    return True


cdef void _go(int* P, int n, int* ci, int* cj, int ncells, int k, list out):
    cdef int i, j, v, one = n - 1
    if k == ncells:
        out.append(tuple([P[t] for t in range(n * n)]))
        return
    i = ci[k]
    j = cj[k]
    for v in range(-1, one):
        if v == 0:
            continue
        if v != UNDEF:
            if v == i or v == j or not _row_ok(P, n, i, v) or not _row_ok(P, n, j, v):
                continue
        P[i * n + j] = v
        P[j * n + i] = v
        if _assoc_ok(P, n):
            _go(P, n, ci, cj, ncells, k + 1, out)
        P[i * n + j] = UNKNOWN
        P[j * n + i] = UNKNOWN


def fill_plus(int n, comp):
    """All commutative, associative completions of the forced table for ``comp``."""
    if n < 2 or n > MAXN:
        raise ValueError(f"kernel supports 2 <= n <= {MAXN}")
    cdef int one = n - 1
    cdef int P[MAXN * MAXN]
    cdef int ci[MAXN * MAXN]
    cdef int cj[MAXN * MAXN]
    cdef int x, y, ncells = 0
    for x in range(n):
        for y in range(n):
            if x == 0 or y == 0:
                P[x * n + y] = x + y
            elif x == one or y == one:
                P[x * n + y] = UNDEF
            else:
                P[x * n + y] = UNKNOWN
    for x in range(1, one):
        P[x * n + <int>comp[x]] = one
    for x in range(1, one):
        for y in range(x, one):
            if P[x * n + y] == UNKNOWN:
                ci[ncells] = x
                cj[ncells] = y
                ncells += 1
    out = []
    _go(P, n, ci, cj, ncells, 0, out)
    return out


cdef bint _next_perm(int* a, int m) nogil:
    """Advance ``a[0:m]`` to the next permutation in lexicographic order."""
    cdef int i = m - 2, j, t
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = m - 1
    while a[j] <= a[i]:
        j -= 1
    t = a[i]; a[i] = a[j]; a[j] = t
    i += 1
    j = m - 1
    while i < j:
        t = a[i]; a[i] = a[j]; a[j] = t
        i += 1
        j -= 1
    return True


def canonical_code(int n, table):
    """Least relabelled table over every middle permutation, one byte per cell."""
    cdef int T[MAXN * MAXN]
    cdef int pi[MAXN]
    cdef int mid[MAXN]
    cdef unsigned char best[MAXN * MAXN]
    cdef unsigned char cur[MAXN * MAXN]
    if n < 2 or n > MAXN:
        raise ValueError(f"kernel supports 2 <= n <= {MAXN}")
    cdef int x, y, v, m = n - 2, nn = n * n, have = 0, better
    for x in range(nn):
        T[x] = table[x]
    for x in range(m):
        mid[x] = x + 1
    while True:
        pi[0] = 0
        pi[n - 1] = n - 1
        for x in range(m):
            pi[x + 1] = mid[x]
        for x in range(n):
            for y in range(n):
                v = T[x * n + y]
                cur[pi[x] * n + pi[y]] = 0 if v < 0 else pi[v] + 1
        better = not have
        if have:
            for x in range(nn):
                if cur[x] != best[x]:
                    better = cur[x] < best[x]
                    break
        if better:
            memcpy(best, cur, nn)
            have = 1
        if m < 2 or not _next_perm(mid, m):
            break
    return bytes([n]) + bytes([best[x] for x in range(nn)])
