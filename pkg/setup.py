"""Build script: compiles the Cython search kernel when possible.

The package is fully functional without the extension; nplabel.search
falls back to the pure-Python kernel at import time, so a failed compile
only costs speed.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler: fall back to pure python
            print("WARNING: extension build failed (%s); using the pure-Python "
                  "search kernel" % exc, file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print("WARNING: building %s failed (%s); using the pure-Python "
                  "search kernel" % (ext.name, exc), file=sys.stderr)


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "nplabel._searchext",
                ["src/nplabel/_searchext.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("WARNING: Cython not available; using the pure-Python search kernel",
          file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
