# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled box search over small integer boxes.

Same contract and enumeration order as ``_kernels_py.box_search``.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()


cdef inline long _val(long idx):
    # 0, 1, -1, 2, -2, ...
    if idx == 0:
        return 0
    if idx & 1:
        return (idx + 1) >> 1
    return -(idx >> 1)


def box_search(gram, bounds, long target, gram2=None, long target2=0, long max_hits=-1):
    cdef cnp.int64_t[:, ::1] g = np.ascontiguousarray(gram, dtype=np.int64)
    cdef Py_ssize_t n = g.shape[0]
    cdef cnp.int64_t[::1] b = np.ascontiguousarray(bounds, dtype=np.int64)
    cdef bint two = gram2 is not None
    cdef cnp.int64_t[:, ::1] h = np.ascontiguousarray(
        gram2 if two else np.zeros((n, n)), dtype=np.int64)
    hits = []
    if n == 0:
        return hits
    cdef long *idx = <long *> malloc(n * sizeof(long))
    cdef long *x = <long *> malloc(n * sizeof(long))
    cdef long *gx = <long *> malloc(n * sizeof(long))
    cdef long *hx = <long *> malloc(n * sizeof(long))
    cdef Py_ssize_t i, k, last = n - 1
    cdef long nv, d, q1, q2, t, a1, a2, c1, c2, lin1, lin2, v
    cdef long width_last = 2 * b[last] + 1
    cdef long found = 0
    cdef bint nz
    try:
        for i in range(n):
            idx[i] = 0
            x[i] = 0
            gx[i] = 0
            hx[i] = 0
        q1 = 0
        q2 = 0
        a1 = g[last, last]
        a2 = h[last, last]
        while True:
            # innermost coordinate: q(x + t e_last) = q + 2 t (Gx)_last + t^2 G_ll
            c1 = q1
            c2 = q2
            lin1 = gx[last]
            lin2 = hx[last]
            for t in range(width_last):
                v = _val(t)
                if c1 + 2 * v * lin1 + v * v * a1 == target:
                    if (not two) or c2 + 2 * v * lin2 + v * v * a2 == target2:
                        x[last] = v
                        nz = False
                        for i in range(n):
                            if x[i] != 0:
                                nz = True
                                break
                        if nz:
                            hits.append(tuple(x[i] for i in range(n)))
                            found += 1
                            if max_hits >= 0 and found >= max_hits:
                                x[last] = 0
                                return hits
                        x[last] = 0
            # odometer on coordinates 0 .. last-1, last-1 fastest
            k = last - 1
            while k >= 0:
                if idx[k] + 1 < 2 * b[k] + 1:
                    idx[k] += 1
                    nv = _val(idx[k])
                    break
                idx[k] = 0
                nv = 0
                d = nv - x[k]
                if d != 0:
                    q1 += 2 * d * gx[k] + d * d * g[k, k]
                    q2 += 2 * d * hx[k] + d * d * h[k, k]
                    for i in range(n):
                        gx[i] += d * g[i, k]
                        hx[i] += d * h[i, k]
                    x[k] = nv
                k -= 1
            if k < 0:
                break
            d = nv - x[k]
            q1 += 2 * d * gx[k] + d * d * g[k, k]
            q2 += 2 * d * hx[k] + d * d * h[k, k]
            for i in range(n):
                gx[i] += d * g[i, k]
                hx[i] += d * h[i, k]
            x[k] = nv
        return hits
    finally:
        free(idx)
        free(x)
        free(gx)
        free(hx)
