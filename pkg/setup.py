import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DESCENTD_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "descentd._kernels._speedups",
                    ["src/descentd/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # no Cython at build time: install with the pure-Python kernels only
        ext_modules = []

setup(ext_modules=ext_modules)
