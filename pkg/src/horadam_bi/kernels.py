"""Backend selection for the certification kernel.

The compiled extension is used when it was built; otherwise the NumPy
version. Setting ``HORADAM_BI_PURE_PYTHON=1`` forces the NumPy path.
"""
import os

from . import _kernels_py

try:
    if os.environ.get("HORADAM_BI_PURE_PYTHON"):
        raise ImportError("pure-python backend requested")
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

BACKENDS = {"python": _kernels_py.certify_block}
if _compiled is not None:
    BACKENDS["cython"] = _compiled.certify_block

BACKEND = "cython" if _compiled is not None else "python"
certify_block = BACKENDS[BACKEND]
