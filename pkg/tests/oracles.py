"""Independent reference computations used to freeze expected values."""

from itertools import product

import numpy as np
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf


def invariant_factors(gram):
    d = sympy_snf(sympy.Matrix(gram), domain=sympy.ZZ)
    diag = [abs(int(d[i, i])) for i in range(min(d.shape))]
    return tuple(sorted(x for x in diag if x > 1))


def signature(gram):
    ev = np.linalg.eigvalsh(np.array(gram, dtype=float))
    return (int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((abs(ev) <= 1e-9).sum()))


def delta_two_elementary(gram):
    """0 iff every element of L*/L has integral norm; needs 2L* in L."""
    g = sympy.Matrix(gram)
    y = (2 * g.inv()).applyfunc(int)       # columns: 2 e_i^*
    y = np.array(y.tolist(), dtype=np.int64)
    gn = np.array(gram, dtype=np.int64)
    n = len(gram)
    for c in product((0, 1), repeat=n):
        v = y @ np.array(c, dtype=np.int64)
        if int(v @ gn @ v) % 4:
            return 1
    return 0


def count_vectors_of_norm(gram, norm, bound):
    """Exhaustive count inside a cube, for small lattices only."""
    g = np.array(gram, dtype=np.int64)
    n = len(gram)
    pts = np.array(list(product(range(-bound, bound + 1), repeat=n)), dtype=np.int64)
    return int((np.einsum("ij,jk,ik->i", pts, g, pts) == norm).sum())
