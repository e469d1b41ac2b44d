from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/bchforge/_kernel_cy.pyx"],
        language_level=3,
    )
except ImportError:
    # the package still works on the pure-Python kernel
    ext_modules = []

setup(ext_modules=ext_modules)
