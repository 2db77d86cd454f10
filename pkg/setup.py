"""Build shim: compiles the optional GF(2) kernel extension.

The package works without the extension (a pure-Python implementation with
the same API is selected at import time), so any build failure here is
non-fatal by design: comment out ext_modules and reinstall if the local
toolchain cannot build C extensions.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/subspacecodes/_kernels.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
