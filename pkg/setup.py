"""Builds the optional compiled kernel. Works without Cython (pure fallback)."""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [Extension("dbhole.kernels._cyl", ["src/dbhole/kernels/_cyl.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
