"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is
selected at import time); set SEHATBOT_PURE=1 to skip compilation.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("SEHATBOT_PURE"):
        return []
    from Cython.Build import cythonize

    return cythonize(
        [
            Extension(
                "sehatbot.speed._kernels",
                ["src/sehatbot/speed/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions())
