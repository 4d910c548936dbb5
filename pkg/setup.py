from setuptools import Extension, setup

# The compiled kernels are optional; the package falls back to pure Python.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bgs_forge._kernels._native",
                ["src/bgs_forge/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
