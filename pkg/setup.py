from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "divalg._kernels._native",
                sources=["src/divalg/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "initializedcheck": False,
        },
    )
except ImportError:
    # No Cython: install pure-Python only; divalg._kernels falls back at import.
    extensions = []

setup(ext_modules=extensions)
