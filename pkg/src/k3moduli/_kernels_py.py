"""Pure numpy box search, used when the compiled kernel is unavailable.

Enumeration order (shared with the Cython kernel): lexicographic with the
first coordinate slowest, each coordinate running 0, 1, -1, 2, -2, ...
"""

from itertools import islice, product

import numpy as np

_INNER_TARGET = 40000
_CHUNK_ENTRIES = 1 << 22


def _values(bound):
    vals = [0]
    for k in range(1, bound + 1):
        vals += [k, -k]
    return vals


def box_search(gram, bounds, target, gram2=None, target2=0, max_hits=-1):
    g = np.asarray(gram, dtype=np.int64)
    n = g.shape[0]
    if n == 0:
        return []
    bounds = [int(b) for b in bounds]
    two = gram2 is not None
    h = np.asarray(gram2, dtype=np.int64) if two else None

    # split coordinates: the last `k` are vectorised
    k, size = 0, 1
    while k < n and size * (2 * bounds[n - 1 - k] + 1) <= _INNER_TARGET:
        size *= 2 * bounds[n - 1 - k] + 1
        k += 1
    k = max(k, 1)
    split = n - k

    inner = np.array(list(product(*[_values(b) for b in bounds[split:]])), dtype=np.int64)
    outer_iter = product(*[_values(b) for b in bounds[:split]])

    def prep(m):
        m_ii = m[split:, split:]
        n_in = np.einsum("ij,jk,ik->i", inner, m_ii, inner)
        return n_in, m[:split, split:], m[:split, :split]

    n_in1, cross1, m_oo1 = prep(g)
    if two:
        n_in2, cross2, m_oo2 = prep(h)

    hits = []
    rows = max(1, _CHUNK_ENTRIES // len(inner))
    while True:
        block = list(islice(outer_iter, rows))
        if not block:
            break
        out = np.array(block, dtype=np.int64).reshape(len(block), split)
        q = (np.einsum("ij,jk,ik->i", out, m_oo1, out)[:, None] + n_in1[None, :]
             + 2 * (out @ cross1) @ inner.T)
        mask = q == target
        if two:
            q2 = (np.einsum("ij,jk,ik->i", out, m_oo2, out)[:, None] + n_in2[None, :]
                  + 2 * (out @ cross2) @ inner.T)
            mask &= q2 == target2
        for r, c in zip(*np.nonzero(mask)):
            vec = tuple(int(v) for v in out[r]) + tuple(int(v) for v in inner[c])
            if any(vec):
                hits.append(vec)
                if 0 <= max_hits <= len(hits):
                    return hits
        if len(block) < rows:
            break
    return hits
