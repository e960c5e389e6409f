import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("KNOTPERIOD_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "knotperiod._kernels",
                    ["src/knotperiod/_kernels.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
