"""Kernel backend selection.

``ENDOGATE_BACKEND=numpy`` forces the vectorized numpy kernels,
``ENDOGATE_BACKEND=numba`` requires the JIT kernels, anything else (the
default, ``auto``) uses numba when it imports and numpy otherwise.
Both backends expose the same functions with identical results.
"""

import os

from .config import BACKEND_ENV


def _select():
    want = os.environ.get(BACKEND_ENV, "auto").strip().lower()
    if want == "numpy":
        from . import _kernels_numpy as mod
        return "numpy", mod
    try:
        from . import _kernels_numba as mod
    except ImportError:
        if want == "numba":
            raise
        from . import _kernels_numpy as mod
        return "numpy", mod
    return "numba", mod


BACKEND, kernels = _select()


def get_kernels(name=None):
    """Return the kernel module for ``name`` (``"numba"``/``"numpy"``) or the active one."""
    if name is None:
        return kernels
    if name == "numpy":
        from . import _kernels_numpy as mod
    elif name == "numba":
        from . import _kernels_numba as mod
    else:
        raise ValueError(f"unknown backend {name!r}")
    return mod
