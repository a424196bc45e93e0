"""Build script for the optional compiled h-index kernel.

The extension is best-effort: if Cython or a C compiler is unavailable the
package installs anyway and the pure-Python scan is used at import time.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/tcln/_hindex_fast.pyx"], language_level=3
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
