"""Build the optional compiled kernels; the package works without them."""

from setuptools import setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/mvbraid/_ckernels.pyx"],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
