"""Build script.

The tokenizer used by the codebase indexer exists twice: a Cython extension
(`fuzzflow.index._ctokenizer`) and a pure-Python twin
(`fuzzflow.index.ctokens`).  The extension is an optional accelerator: when
Cython or a C compiler is unavailable the build falls back to the pure
package and `fuzzflow.index.tokenizer` selects the Python implementation at
import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/fuzzflow/index/_ctokenizer.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
