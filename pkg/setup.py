"""Build script.  The compiled Kleshchev kernel is optional: if Cython (or a
C compiler) is unavailable the package installs with the pure-Python kernel
only, selected automatically at import time."""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("AKREGIME_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            "src/akregime/_kernel/_ckernel.pyx",
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
