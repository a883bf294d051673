import os

from setuptools import setup

ext_modules = []
if os.environ.get("MAPGEOM_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("mapgeom._kernels._ckernels", ["src/mapgeom/_kernels/_ckernels.pyx"])],
            language_level="3",
            compiler_directives=dict(boundscheck=False, wraparound=False, cdivision=True),
        )

setup(ext_modules=ext_modules)
