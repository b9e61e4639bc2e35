"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure NumPy fallback is selected
at import time), so any build failure here is demoted to a warning.  Set
LAPSEP_NO_EXT=1 to skip the extension build entirely.
"""

import os
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # toolchain missing, etc.
            print(f"warning: skipping extension build ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  "the pure-Python kernels will be used", file=sys.stderr)


ext_modules = []
if os.environ.get("LAPSEP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("lapsep._kernels", ["src/lapsep/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            language_level="3",
        )
    except ImportError:
        print("warning: Cython not available; building without the "
              "compiled kernels", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
