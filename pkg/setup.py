"""Build the optional compiled kernels; the package works without them."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/zdt/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; building with the pure-Python kernels only")

setup(ext_modules=ext_modules)
