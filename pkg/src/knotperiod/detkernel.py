"""Kernel selection: compiled extension when built, pure Python otherwise.

``det_mod`` and ``scan_words`` are re-exported from whichever backend loads;
``BACKEND`` names it ("cython" or "python").  Set KNOTPERIOD_FORCE_PURE=1 in
the environment to skip the extension (used by tests and the benchmark).
"""

import os

if os.environ.get("KNOTPERIOD_FORCE_PURE") == "1":
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
det_mod = _impl.det_mod
scan_words = _impl.scan_words


def both_backends():
    """(name, module) pairs for every importable backend, compiled first."""
    out = []
    try:
        from . import _kernels

        out.append(("cython", _kernels))
    except ImportError:
        pass
    from . import _kernels_py

    out.append(("python", _kernels_py))
    return out
