"""Build script for the optional compiled kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so a failed compile downgrades to a pure-Python install
instead of aborting.
"""

import sys

from setuptools import setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "l1pca._core",
        ["src/l1pca/_core.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


try:
    setup(ext_modules=extensions())
except SystemExit:
    raise
except Exception as exc:  # compiler missing, etc.
    print(f"warning: compiled kernels unavailable ({exc}); "
          "installing with NumPy fallback only", file=sys.stderr)
    setup(ext_modules=[])
