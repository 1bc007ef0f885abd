# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring :mod:`funcdeg._pykernels` one for one.

All residues are held in ``long long``; the dispatcher only routes here when
every modulus is below 2**31, so products of two residues cannot overflow.
"""

from libc.stdlib cimport malloc, free


cdef long long* _to_buffer(values, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> malloc(max(n, 1) * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = values[i]
    return buf


cdef void _fill_neighbours(Py_ssize_t* nb, tuple shape, Py_ssize_t k, int axis):
    cdef Py_ssize_t stride = 1, size = 1, q, x, y, c, j
    cdef int i
    for i in range(len(shape)):
        size *= <Py_ssize_t> shape[i]
        if i > axis:
            stride *= <Py_ssize_t> shape[i]
    q = shape[axis]
    for x in range(size):
        c = (x // stride) % q
        y = x + stride if c < q - 1 else x - (q - 1) * stride
        for j in range(k):
            nb[x * k + j] = y * k + j


cdef inline bint _delta(long long* src, long long* dst, Py_ssize_t* nb,
                        long long* mods, Py_ssize_t total) nogil:
    cdef Py_ssize_t i
    cdef long long v
    cdef bint nonzero = False
    for i in range(total):
        v = (src[nb[i]] - src[i]) % mods[i]
        if v < 0:
            v += mods[i]
        dst[i] = v
        if v:
            nonzero = True
    return nonzero


cdef long long* _mods_buffer(tuple cmod, Py_ssize_t total) except NULL:
    cdef Py_ssize_t k = len(cmod), i
    cdef long long* mods = <long long*> malloc(max(total, 1) * sizeof(long long))
    if mods == NULL:
        raise MemoryError()
    for i in range(total):
        mods[i] = cmod[i % k]
    return mods


def delta_flat(values, tuple shape, tuple cmod, int axis):
    cdef Py_ssize_t total = len(values), k = len(cmod), i
    cdef long long* src = _to_buffer(values, total)
    cdef long long* dst = <long long*> malloc(max(total, 1) * sizeof(long long))
    cdef Py_ssize_t* nb = <Py_ssize_t*> malloc(max(total, 1) * sizeof(Py_ssize_t))
    cdef long long* mods = _mods_buffer(cmod, total)
    try:
        _fill_neighbours(nb, shape, k, axis)
        _delta(src, dst, nb, mods, total)
        return [dst[i] for i in range(total)]
    finally:
        free(src)
        free(dst)
        free(nb)
        free(mods)


cdef int _dfs(long long* buf, Py_ssize_t total, Py_ssize_t** nbs, int* axes,
              int naxes, long long* mods, int depth, int start, int limit) nogil:
    cdef int best = depth, r, pos
    cdef long long* src = buf + depth * total
    cdef long long* dst = buf + (depth + 1) * total
    if depth >= limit:
        return limit
    for pos in range(start, naxes):
        if _delta(src, dst, nbs[axes[pos]], mods, total):
            r = _dfs(buf, total, nbs, axes, naxes, mods, depth + 1, pos, limit)
            if r > best:
                best = r
                if best >= limit:
                    return limit
    return best


def max_nonzero_order(values, tuple shape, tuple cmod, int cap):
    cdef Py_ssize_t total = len(values), k = len(cmod), i
    cdef int n = len(shape), naxes = 0, limit = cap + 1, result
    if not any(values):
        return -1
    cdef long long* buf = <long long*> malloc((limit + 1) * max(total, 1) * sizeof(long long))
    cdef Py_ssize_t** nbs = <Py_ssize_t**> malloc(max(n, 1) * sizeof(Py_ssize_t*))
    cdef int* axes = <int*> malloc(max(n, 1) * sizeof(int))
    cdef long long* mods = _mods_buffer(cmod, total)
    for i in range(n):
        nbs[i] = NULL
    try:
        for i in range(total):
            buf[i] = values[i]
        for i in range(n):
            if shape[i] > 1:
                nbs[i] = <Py_ssize_t*> malloc(total * sizeof(Py_ssize_t))
                _fill_neighbours(nbs[i], shape, k, i)
                axes[naxes] = i
                naxes += 1
        with nogil:
            result = _dfs(buf, total, nbs, axes, naxes, mods, 0, 0, limit)
        return result
    finally:
        for i in range(n):
            if nbs[i] != NULL:
                free(nbs[i])
        free(nbs)
        free(axes)
        free(buf)
        free(mods)


def partial_nonzero_order(values, tuple shape, tuple cmod, int axis, int cap):
    cdef Py_ssize_t total = len(values), k = len(cmod)
    cdef int r = 0
    cdef long long* tmp
    if not any(values):
        return -1
    cdef long long* a = _to_buffer(values, total)
    cdef long long* b = <long long*> malloc(max(total, 1) * sizeof(long long))
    cdef Py_ssize_t* nb = <Py_ssize_t*> malloc(max(total, 1) * sizeof(Py_ssize_t))
    cdef long long* mods = _mods_buffer(cmod, total)
    try:
        _fill_neighbours(nb, shape, k, axis)
        while r <= cap:
            if not _delta(a, b, nb, mods, total):
                return r
            tmp = a
            a = b
            b = tmp
            r += 1
        return cap + 1
    finally:
        free(a)
        free(b)
        free(nb)
        free(mods)


def convolve(a, b, tuple shape, long long m):
    cdef Py_ssize_t size = len(a), n = len(shape), g, h, i, idx, x
    cdef long long* av = _to_buffer(a, size)
    cdef long long* bv = _to_buffer(b, size)
    cdef long long* out = <long long*> malloc(max(size, 1) * sizeof(long long))
    cdef Py_ssize_t* coords = <Py_ssize_t*> malloc(max(size * n, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* q = <Py_ssize_t*> malloc(max(n, 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* strides = <Py_ssize_t*> malloc(max(n, 1) * sizeof(Py_ssize_t))
    cdef long long bh
    try:
        for i in range(n):
            q[i] = shape[i]
        strides[n - 1] = 1
        for i in range(n - 2, -1, -1):
            strides[i] = strides[i + 1] * q[i + 1]
        for g in range(size):
            x = g
            for i in range(n - 1, -1, -1):
                coords[g * n + i] = x % q[i]
                x //= q[i]
            out[g] = 0
            av[g] %= m
            if av[g] < 0:
                av[g] += m
        with nogil:
            for h in range(size):
                bh = bv[h] % m
                if bh < 0:
                    bh += m
                if bh == 0:
                    continue
                for g in range(size):
                    if av[g] == 0:
                        continue
                    idx = 0
                    for i in range(n):
                        idx += ((coords[g * n + i] + coords[h * n + i]) % q[i]) * strides[i]
                    out[idx] = (out[idx] + av[g] * bh) % m
        return [out[g] for g in range(size)]
    finally:
        free(av)
        free(bv)
        free(out)
        free(coords)
        free(q)
        free(strides)


def cyclic_mul(a, b, long long m):
    cdef Py_ssize_t n = len(a), i, j, t
    cdef long long* av = _to_buffer(a, n)
    cdef long long* bv = _to_buffer(b, n)
    cdef long long* out = <long long*> malloc(max(n, 1) * sizeof(long long))
    try:
        with nogil:
            for i in range(n):
                out[i] = 0
            for i in range(n):
                if av[i] == 0:
                    continue
                for j in range(n):
                    if bv[j] == 0:
                        continue
                    t = (i + j) % n
                    out[t] = (out[t] + av[i] * bv[j]) % m
            for i in range(n):
                if out[i] < 0:
                    out[i] += m
        return [out[i] for i in range(n)]
    finally:
        free(av)
        free(bv)
        free(out)
