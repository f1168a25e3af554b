"""Build the optional Cython quadrature kernel.

A missing Cython or a failing C compiler leaves the pure-Python kernel in
charge; the package still installs.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernel not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} not built ({exc}); using pure Python")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    from setuptools import Extension

    ext = Extension(
        "qwell_engine._simpson_ext",
        ["src/qwell_engine/_simpson_ext.pyx"],
        # keep bit-for-bit agreement with the Python kernel
        extra_compile_args=["-O2", "-ffp-contract=off", "-fno-fast-math"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
