"""Build script: compiles the optional Cython kernel.

The compiled extension (brisk._speedups) accelerates the hot polynomial
kernels; everything works without it through the pure-Python fallback.
Set BRISK_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BRISK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "brisk._speedups",
                    ["src/brisk/_speedups.pyx"],
                    extra_compile_args=["-O2"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
