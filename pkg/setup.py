"""Builds the optional compiled kernel; the package works without it."""

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(["src/snweb/_ckernel.pyx"], language_level=3, quiet=True)

setup(ext_modules=ext_modules)
