"""Build script: compiles the optional Cython kernel extension.

The package works without the extension; vpvtotients._kernels falls back to
the pure-Python implementation at import time if the compiled module is
missing or fails to load.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vpvtotients._kernels._fast",
                ["src/vpvtotients/_kernels/_fast.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
