import os

import numpy as np
from setuptools import Extension, setup

# The compiled kernels are an optional speedup: the package falls back to the
# pure-numpy implementations when the extensions are missing.  Set
# REAGG_SKIP_EXT=1 to build a pure-Python wheel.
ext_modules = []
if not os.environ.get("REAGG_SKIP_EXT"):
    from Cython.Build import cythonize

    extensions = [
        Extension(
            "reagg._kernels._mcmc",
            ["src/reagg/_kernels/_mcmc.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3", "-ffp-contract=off"],
        ),
        Extension(
            "reagg._kernels._geom",
            ["src/reagg/_kernels/_geom.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3", "-ffp-contract=off"],
        ),
    ]
    ext_modules = cythonize(extensions, language_level=3)

setup(ext_modules=ext_modules)
