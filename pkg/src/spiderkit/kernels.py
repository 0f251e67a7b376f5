"""Kernel selection: compiled extension when importable, else the Python fallback.

Set ``SPIDERKIT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _pykernels

BACKEND = "python"

if os.environ.get("SPIDERKIT_PURE_PYTHON", "") not in ("", "0"):
    from ._pykernels import first_p4_violation, thick_census, thin_census
else:
    try:
        from ._kernels import first_p4_violation, thick_census, thin_census

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import first_p4_violation, thick_census, thin_census

__all__ = ["BACKEND", "thin_census", "thick_census", "first_p4_violation", "_pykernels"]
