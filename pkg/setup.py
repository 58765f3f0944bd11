"""Build script: compiles the optional elimination kernel.

The package is pure Python; `orbitatlas._corex` is a Cython extension holding
the hot mod-p elimination loop.  If Cython or a C compiler is unavailable the
build falls through and the package selects a numpy or pure-Python kernel at
import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "orbitatlas._corex",
                ["src/orbitatlas/_corex.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
