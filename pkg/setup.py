"""Build hook: compile the optional Cython kernels when Cython is available.

The package is fully functional without the extension; ckgeo.kernels falls
back to the pure-Python twin at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ckgeo/_kernels_cy.pyx"],
        language_level=3,
    )
except ImportError:  # pragma: no cover - build-environment dependent
    ext_modules = []

setup(ext_modules=ext_modules)
