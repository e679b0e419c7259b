from setuptools import Extension, setup

# The compiled scan kernel is optional: without Cython (or on build failure)
# the package falls back to the pure-Python kernel selected at import time.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "basekit._scan_cy",
                ["src/basekit/_scan_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
