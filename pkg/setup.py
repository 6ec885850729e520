"""Builds the optional compiled kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("EFFECTLOGIC_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("effectlogic.enumeration._kernel", ["src/effectlogic/enumeration/_kernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
