"""Builds the optional compiled word kernel.

The package works without it (a pure-Python kernel is selected at import
time), so a missing Cython or C compiler only costs speed.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/mcgcalc/_wordops_c.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
