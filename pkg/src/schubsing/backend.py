"""Select the sweep-kernel implementation at import time.

The compiled extension ``schubsing._kernels`` is preferred; the pure-Python
twin ``schubsing._kernels_py`` is the fallback.  Set SCHUBSING_BACKEND to
"python" or "cython" to force one (forcing "cython" raises if the extension
was not built).
"""

from __future__ import annotations

import os

_forced = os.environ.get("SCHUBSING_BACKEND")

if _forced == "python":
    from . import _kernels_py as kernels

    BACKEND = "python"
elif _forced == "cython":
    from . import _kernels as kernels  # type: ignore[no-redef]

    BACKEND = "cython"
else:
    try:
        from . import _kernels as kernels  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as kernels

        BACKEND = "python"

__all__ = ["BACKEND", "kernels"]
