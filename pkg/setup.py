from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "caselogic._kernels._ckernels",
                ["src/caselogic/_kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # the package falls back to the pure-Python kernels at import time
    ext_modules = []

setup(ext_modules=ext_modules)
