import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("SEMIGROUP_FORGE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "semigroup_forge._kernel",
                    ["src/semigroup_forge/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: install with the pure-Python kernel only.
        extensions = []

setup(ext_modules=extensions)
