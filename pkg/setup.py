"""Build script: compiles the optional Cython enumeration kernel.

The package works without the extension (a pure-Python twin of the kernel
is selected at import time), so any build failure here degrades gracefully
to a source-only install.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("sscat._fastpaths", ["src/sscat/_fastpaths.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
