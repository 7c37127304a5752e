"""Build script: compiles the optional kernel extension when Cython is available.

The package is fully functional without the extension; the pure-Python
kernel twins in treemean._kernels_py are selected at import time as a
fallback.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "treemean._kernels_c",
                ["src/treemean/_kernels_c.pyx"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
