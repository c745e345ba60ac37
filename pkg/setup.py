"""Builds the optional compiled kernels.

The package is fully functional without the extension: dptrack.kernels
falls back to the vectorized numpy implementations when the import of
dptrack._kernels fails.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "dptrack._kernels",
                ["src/dptrack/_kernels.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
