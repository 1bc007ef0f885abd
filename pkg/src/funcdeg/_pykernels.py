"""Pure-Python kernels; the reference backend and the fallback when the
compiled extension is unavailable.

Tables are flat row-major lists: element ``x`` (in enumeration order of the
domain, shape ``shape``) occupies slots ``x*k .. x*k+k-1`` where ``k`` is the
number of codomain coordinates, reduced modulo ``cmod``.
"""

from __future__ import annotations

from math import prod


def _neighbours(shape, k, axis):
    """Flat index of (x + e_axis, c) for every flat slot (x, c)."""
    stride = prod(shape[axis + 1:])
    q = shape[axis]
    out = []
    for x in range(prod(shape)):
        c = (x // stride) % q
        y = x + stride if c < q - 1 else x - (q - 1) * stride
        out.extend(range(y * k, y * k + k))
    return out


def delta_flat(values, shape, cmod, axis):
    k = len(cmod)
    nb = _neighbours(shape, k, axis)
    mods = list(cmod) * (len(values) // k)
    return [(values[j] - v) % m for v, j, m in zip(values, nb, mods)]


def max_nonzero_order(values, shape, cmod, cap):
    """Largest |d| with Delta^d f != 0, stopping at cap + 1; -1 for f == 0.

    Differences commute, so each multi-index is visited once by applying axes
    in non-decreasing order; zero tables are pruned.
    """
    if not any(values):
        return -1
    k = len(cmod)
    n = len(shape)
    nbs = [_neighbours(shape, k, ax) for ax in range(n)]
    mods = list(cmod) * (len(values) // k)
    axes = [ax for ax in range(n) if shape[ax] > 1]
    limit = cap + 1
    best = 0
    stack = [(list(values), 0, 0)]
    while stack:
        t, start, order = stack.pop()
        if order > best:
            best = order
            if best >= limit:
                return limit
        for pos in range(start, len(axes)):
            nb = nbs[axes[pos]]
            d = [(t[j] - v) % m for v, j, m in zip(t, nb, mods)]
            if any(d):
                stack.append((d, pos, order + 1))
    return best


def partial_nonzero_order(values, shape, cmod, axis, cap):
    """Largest r <= cap + 1 with Delta_axis^r f != 0; -1 for f == 0."""
    if not any(values):
        return -1
    k = len(cmod)
    nb = _neighbours(shape, k, axis)
    mods = list(cmod) * (len(values) // k)
    t = list(values)
    r = 0
    while r <= cap:
        t = [(t[j] - v) % m for v, j, m in zip(t, nb, mods)]
        if not any(t):
            return r
        r += 1
    return cap + 1


def convolve(a, b, shape, m):
    """Group-ring product in Z_m[Z_{q_1} x ... x Z_{q_n}], sparse in ``b``."""
    size = len(a)
    coords = []
    for x in range(size):
        c = []
        for q in reversed(shape):
            x, r = divmod(x, q)
            c.append(r)
        coords.append(c[::-1])
    strides = [prod(shape[i + 1:]) for i in range(len(shape))]
    out = [0] * size
    for h, bh in enumerate(b):
        if not bh % m:
            continue
        ch = coords[h]
        for g, ag in enumerate(a):
            if ag:
                cg = coords[g]
                idx = 0
                for cgi, chi, q, s in zip(cg, ch, shape, strides):
                    idx += ((cgi + chi) % q) * s
                out[idx] = (out[idx] + ag * bh) % m
    return out


def cyclic_mul(a, b, m):
    """Product in Z_m[x]/(x^N - 1) with N = len(a) = len(b)."""
    n = len(a)
    out = [0] * n
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[(i + j) % n] = (out[(i + j) % n] + ai * bj) % m
    return out
