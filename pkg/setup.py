"""Build hook for the optional compiled kernel.

The package is pure Python; if Cython (or a C compiler) is missing the
extension is skipped and segrenum.kernel falls back to the pure twin.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "segrenum.kernel._speed",
                ["src/segrenum/kernel/_speed.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
