"""Builds the optional compiled search kernel.

The package works without it: simdom._kernels falls back to the pure
Python implementation when the extension is missing.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "simdom._kernels._vc_core",
                ["src/simdom/_kernels/_vc_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
