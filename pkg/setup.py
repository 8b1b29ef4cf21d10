"""Build script: compiles the Gibbs-sampling extension when Cython and a C
compiler are available. The package falls back to the pure-Python kernels at
import time if the extension is missing, so a failed compile is not fatal."""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "crosseval._kernels._gibbs",
                ["src/crosseval/_kernels/_gibbs.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
