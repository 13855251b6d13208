"""Build script: compiles the optional enumeration kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time), so any compilation problem only costs speed.
Set QCSST_PURE=1 to skip the extension build entirely.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; warn and continue otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: skipping compiled kernels ({exc}); "
                  "falling back to the pure-python backend")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "falling back to the pure-python backend")


ext_modules = []
if os.environ.get("QCSST_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("qcsst._ckernels", ["src/qcsst/_ckernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not available; building without compiled kernels")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
