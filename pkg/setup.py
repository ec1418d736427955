"""Build helper.

The package is pure Python plus one optional Cython extension holding the
vectorized cover/scene kernels.  If Cython (or a C compiler) is missing the
build silently proceeds without the extension; orbitile._kernels falls back
to its numpy implementation at import time.
"""

import os

from setuptools import setup

PYX = "src/orbitile/_kernels/_speedups.pyx"

ext_modules = []
include_dirs = []
if os.path.exists(PYX):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize([PYX], language_level=3)
        include_dirs = [numpy.get_include()]
    except ImportError:
        pass

if ext_modules:
    for ext in ext_modules:
        ext.include_dirs.extend(include_dirs)

setup(ext_modules=ext_modules)
