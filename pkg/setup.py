"""Build hooks for the optional compiled kernel extension.

The package is pure Python plus one Cython extension holding the hot
training loops (skip-gram updates, LSTM sequence passes). If Cython or a
C compiler is unavailable the install still succeeds and the package
falls back to the numpy kernels at import time. Set OPINIQ_SKIP_EXT=1 to
force a pure build.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("OPINIQ_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("opiniq._kernels._fast", ["src/opiniq/_kernels/_fast.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
