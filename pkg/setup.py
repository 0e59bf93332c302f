"""Build the optional compiled kernels.

The package is pure Python plus one small Cython extension holding the hot
loops of the symmetric-group sweeps.  The extension is optional: set
SCHUBSING_PURE=1 (or build without Cython available) to skip it, and the
pure-Python fallback in schubsing._kernels_py is used instead.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SCHUBSING_PURE") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            ["src/schubsing/_kernels.pyx"],
            language_level="3",
        )

setup(ext_modules=ext_modules)
