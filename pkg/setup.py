import os

from setuptools import setup

ext_modules = []
if os.environ.get("DDIRAC_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("ddirac._kernels", ["src/ddirac/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            language_level=3,
        )
    except ImportError:
        # no Cython: the pure-Python kernel backend is used instead
        ext_modules = []

setup(ext_modules=ext_modules)
