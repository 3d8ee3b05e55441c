"""Build script: compiles the term-arithmetic kernels when Cython and a C
compiler are available, otherwise installs the pure-Python fallback only."""

import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class _OptionalBuildExt(build_ext):
    """Let the install proceed with the pure-Python kernels if the C build fails."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:
            print(f"qgb: C kernel build skipped ({exc}); using pure-Python kernels",
                  file=sys.stderr)

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"qgb: building {ext.name} failed ({exc}); using pure-Python kernels",
                  file=sys.stderr)


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        ["src/qgb/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )


setup(
    ext_modules=_extensions(),
    cmdclass={"build_ext": _OptionalBuildExt},
)
