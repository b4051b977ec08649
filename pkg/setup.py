"""Build script: compiles the optional scan-kernel extension when Cython and a
C toolchain are available, and falls back to the pure-numpy kernels otherwise.
The package selects the backend at import time, so a pure install is fully
functional."""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/crossplit/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - toolchain-dependent
    sys.stderr.write(
        f"crossplit: skipping compiled kernels ({exc!r}); "
        "the pure-python backend will be used.\n"
    )

setup(ext_modules=ext_modules)
