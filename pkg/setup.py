from setuptools import setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package falls back to the pure-Python counting routines.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/treecensus/_kernel.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
