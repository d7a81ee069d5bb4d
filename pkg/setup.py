"""Build script: compiles the optional Cython kernel.

The package is fully functional without the extension (a pure-Python
twin of every kernel is selected at import time), so a failed build is
downgraded to a warning rather than an install error.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/eisensym/_kernel.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    sys.stderr.write(f"warning: Cython kernel not built ({exc}); "
                     "falling back to pure Python at runtime\n")

setup(ext_modules=ext_modules)
