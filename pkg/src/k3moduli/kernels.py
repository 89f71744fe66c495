"""Backend selection for the box-search kernel.

The compiled extension is used when importable; set ``K3MODULI_PURE=1`` to
force the numpy fallback.
"""

import os

from . import _kernels_py

try:
    if os.environ.get("K3MODULI_PURE"):
        raise ImportError("pure backend requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "numpy"


def box_search(gram, bounds, target, gram2=None, target2=0, max_hits=-1, backend=None):
    """Nonzero integer vectors ``x`` with ``|x_i| <= bounds[i]`` and ``x^T G x == target``.

    With ``gram2`` given, also require ``x^T H x == target2``.  Hits come back
    in a fixed order (first coordinate slowest, each coordinate running
    0, 1, -1, 2, -2, ...), at most ``max_hits`` of them when nonnegative.
    """
    n = len(gram)
    if isinstance(bounds, int):
        bounds = [bounds] * n
    if len(bounds) != n:
        raise ValueError("one bound per coordinate")
    if any(b < 0 for b in bounds):
        raise ValueError("bounds must be nonnegative")
    impl = _select(backend)
    return impl.box_search(gram, bounds, int(target), gram2, int(target2), int(max_hits))


def _select(backend):
    if backend is None:
        backend = BACKEND
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernel not built")
        return _compiled
    if backend == "numpy":
        return _kernels_py
    raise ValueError(f"unknown backend {backend!r}")
