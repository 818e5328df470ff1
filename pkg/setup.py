"""Build script: compiles the optional C extension core when Cython is available.

The package is fully functional without the extension (a pure-Python twin of
every kernel ships in cachenoma._kernels_py); the extension only makes the
hot scalar kernels fast.  Set CACHENOMA_SKIP_EXT=1 to force a pure build.
"""
import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            print(f"warning: extension build skipped ({exc}); using pure-Python kernels")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); using pure-Python kernels")


ext_modules = []
cmdclass = {}
if not os.environ.get("CACHENOMA_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cachenoma._ckernels", ["src/cachenoma/_ckernels.pyx"])],
            language_level=3,
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print("warning: Cython not available; using pure-Python kernels")

setup(ext_modules=ext_modules, cmdclass=cmdclass)
