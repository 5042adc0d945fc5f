"""Pick the compiled kernels when available, else the pure-Python ones.

Set ``SRDOM_PURE=1`` to force the fallback.
"""
import importlib
import os

import numpy as np

from . import _pure

INF = _pure.INF


def _load_compiled():
    try:
        return importlib.import_module("srdom._ext")
    except ImportError:
        return None


_compiled = _load_compiled()

if _compiled is not None and os.environ.get("SRDOM_PURE", "") not in ("1", "true", "yes"):
    _active = _compiled
    BACKEND = "compiled"
else:
    _active = _pure
    BACKEND = "pure"


def available_backends():
    return ["compiled", "pure"] if _compiled is not None else ["pure"]


def backend(name=None):
    """Kernel module by name (``"compiled"``/``"pure"``), default the active one."""
    if name is None:
        return _active
    if name == "pure":
        return _pure
    if name == "compiled":
        if _compiled is None:
            raise ImportError("compiled kernels are not built (run pip install -e .)")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def use_backend(name):
    """Switch the process-wide default backend."""
    global _active, BACKEND
    _active = backend(name)
    BACKEND = name


def _csr(offsets, neighbors):
    return (np.ascontiguousarray(offsets, dtype=np.int32),
            np.ascontiguousarray(neighbors, dtype=np.int32))


def exhaustive(offsets, neighbors, impl=None):
    return backend(impl).exhaustive(*_csr(offsets, neighbors))


def branch_bound(offsets, neighbors, order, prefix, incumbent, floor, impl=None):
    off, nb = _csr(offsets, neighbors)
    return backend(impl).branch_bound(
        off, nb,
        np.ascontiguousarray(order, dtype=np.int32),
        np.ascontiguousarray(prefix, dtype=np.int32),
        int(incumbent), int(floor),
    )


def sweep(succ, colw, init, final_cost, n_cols, impl=None):
    return backend(impl).sweep(succ, colw, init, final_cost, int(n_cols))
