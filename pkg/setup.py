"""Builds the optional Cython playout kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so a failed compile is downgraded to a warning.
"""

import warnings

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "zeckgame._kernel_c",
                ["src/zeckgame/_kernel_c.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    warnings.warn("Cython not available; building without the compiled kernel")
    extensions = []

setup(ext_modules=extensions)
