import os

from setuptools import setup

# The compiled search kernel is optional: without Cython (or with
# PULTR_NO_EXT=1) the package installs anyway and falls back to the pure
# Python kernel in pultr._fallback at import time.
ext_modules = []
if os.environ.get("PULTR_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("pultr._speedups", ["src/pultr/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
