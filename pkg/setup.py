"""Build script for the optional compiled triple-store core.

The extension is a performance add-on: if Cython or a C++ toolchain is
missing, the build still succeeds and the package falls back to the pure
Python core (src/mmods/_core_py.py) at import time.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


def extensions():
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    ext = Extension(
        "mmods._core",
        ["src/mmods/_core.pyx"],
        language="c++",
    )
    return cythonize([ext], language_level=3)


class optional_build_ext(build_ext):
    """Never fail the install over the compiled core."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing or broken
            print(f"WARNING: compiled core skipped ({exc}); using pure Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: could not build {ext.name} ({exc}); using pure Python fallback")


setup(
    ext_modules=extensions(),
    cmdclass={"build_ext": optional_build_ext},
)
