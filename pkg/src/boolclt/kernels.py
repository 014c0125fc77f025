"""Backend selection for the hot loops.

The compiled extension is used when it was built; set
``BOOLCLT_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("BOOLCLT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _impl
        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels
else:
    _impl = _pykernels

horner = _impl.horner
bisect_root = _impl.bisect_root
levy_bisect = _impl.levy_bisect
kolmogorov_steps = _impl.kolmogorov_steps

__all__ = ["BACKEND", "horner", "bisect_root", "levy_bisect", "kolmogorov_steps"]
