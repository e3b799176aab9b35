# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of ``_kernels_py``; same search order, same node counts.

Values are held in signed 64-bit integers. The dispatcher in ``kernels``
only routes inputs here when every intermediate sum provably fits.
"""
from libc.stdlib cimport malloc, free

from .errors import SearchBudgetExceeded

ctypedef long long ll


cdef struct Ctx:
    int n
    int m
    ll *a
    ll *b
    ll *ux
    ll *uy
    ll *maxb_suf
    ll *cap_suf
    ll *cur
    ll rhs_max
    ll y_cap
    ll nodes
    ll max_nodes
    bint over


cdef inline ll _min(ll p, ll q) nogil:
    return p if p < q else q


cdef object _emit(Ctx *c):
    cdef int k
    return tuple([c.cur[k] for k in range(c.n + c.m)])


cdef int _ydfs(Ctx *c, int j, ll rem, ll target, list out) except -1:
    cdef ll bj, top, v
    c.nodes += 1
    if c.nodes > c.max_nodes:
        c.over = True
        return 0
    if target > rem * c.maxb_suf[j] or target > c.cap_suf[j]:
        return 0
    bj = c.b[j]
    if j == c.m - 1:
        if target % bj == 0 and target // bj <= _min(c.uy[j], rem):
            c.cur[c.n + j] = target // bj
            out.append(_emit(c))
            c.cur[c.n + j] = 0
        return 0
    top = _min(_min(c.uy[j], rem), target // bj)
    v = 0
    while v <= top:
        c.cur[c.n + j] = v
        _ydfs(c, j + 1, rem - v, target - v * bj, out)
        if c.over:
            return 0
        v += 1
    c.cur[c.n + j] = 0
    return 0


cdef int _xdfs(Ctx *c, int i, ll rem, ll lhs, list out) except -1:
    cdef ll ai, top, v
    c.nodes += 1
    if c.nodes > c.max_nodes:
        c.over = True
        return 0
    if i == c.n:
        _ydfs(c, 0, c.y_cap, lhs, out)
        return 0
    ai = c.a[i]
    top = _min(_min(c.ux[i], rem), (c.rhs_max - lhs) // ai)
    v = 0
    while v <= top:
        c.cur[i] = v
        _xdfs(c, i + 1, rem - v, lhs + v * ai, out)
        if c.over:
            return 0
        v += 1
    c.cur[i] = 0
    return 0


def solutions(a, b, ux, uy, ll x_cap, ll y_cap, ll max_nodes):
    cdef Ctx c
    cdef int n = len(a), m = len(b), k
    cdef list out = []
    c.n = n
    c.m = m
    c.a = <ll *> malloc(n * sizeof(ll))
    c.ux = <ll *> malloc(n * sizeof(ll))
    c.b = <ll *> malloc(m * sizeof(ll))
    c.uy = <ll *> malloc(m * sizeof(ll))
    c.maxb_suf = <ll *> malloc((m + 1) * sizeof(ll))
    c.cap_suf = <ll *> malloc((m + 1) * sizeof(ll))
    c.cur = <ll *> malloc((n + m) * sizeof(ll))
    try:
        for k in range(n):
            c.a[k] = a[k]
            c.ux[k] = ux[k]
            c.cur[k] = 0
        for k in range(m):
            c.b[k] = b[k]
            c.uy[k] = uy[k]
            c.cur[n + k] = 0
        c.maxb_suf[m] = 0
        c.cap_suf[m] = 0
        for k in range(m - 1, -1, -1):
            c.maxb_suf[k] = c.maxb_suf[k + 1] if c.maxb_suf[k + 1] > c.b[k] else c.b[k]
            c.cap_suf[k] = c.cap_suf[k + 1] + c.uy[k] * c.b[k]
        c.rhs_max = _min(y_cap * c.maxb_suf[0], c.cap_suf[0])
        c.y_cap = y_cap
        c.nodes = 0
        c.max_nodes = max_nodes
        c.over = False
        _xdfs(&c, 0, x_cap, 0, out)
        if c.over:
            raise SearchBudgetExceeded(max_nodes)
        return out, c.nodes
    finally:
        free(c.a)
        free(c.ux)
        free(c.b)
        free(c.uy)
        free(c.maxb_suf)
        free(c.cap_suf)
        free(c.cur)


def minimal_filter(vectors):
    cdef list order = sorted(vectors, key=lambda t: (sum(t), t))
    cdef Py_ssize_t count = len(order), d, r, k, p
    cdef ll *data
    cdef Py_ssize_t *kept
    cdef Py_ssize_t nkept = 0
    cdef bint dominated
    if count == 0:
        return []
    d = len(order[0])
    data = <ll *> malloc(count * d * sizeof(ll))
    kept = <Py_ssize_t *> malloc(count * sizeof(Py_ssize_t))
    try:
        for r in range(count):
            row = order[r]
            for k in range(d):
                data[r * d + k] = row[k]
        for r in range(count):
            dominated = False
            for p in range(nkept):
                dominated = True
                for k in range(d):
                    if data[kept[p] * d + k] > data[r * d + k]:
                        dominated = False
                        break
                if dominated:
                    break
            if not dominated:
                kept[nkept] = r
                nkept += 1
        result = [order[kept[p]] for p in range(nkept)]
    finally:
        free(data)
        free(kept)
    result.sort()
    return result
