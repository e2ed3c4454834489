"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so the extension is marked optional and a failed compile
only downgrades performance.
"""

import os

from setuptools import Extension, setup

PYX = "src/curvelab/kernels/_core.pyx"

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None and os.path.exists(PYX):
    extensions = cythonize(
        [
            Extension(
                "curvelab.kernels._core",
                [PYX],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
else:
    extensions = []

setup(ext_modules=extensions)
