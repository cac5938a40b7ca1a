import os

from setuptools import setup

# The row-reduction kernel has a compiled variant; the package falls back to
# the pure-Python implementation when the extension is absent, so the build
# must succeed without Cython or a C compiler. FLAGCOHOM_PURE=1 skips the
# extension on purpose.
ext_modules = []
if os.environ.get("FLAGCOHOM_PURE") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("flagcohom._rowreduce", ["src/flagcohom/_rowreduce.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
