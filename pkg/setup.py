from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("revsynth._speedups", ["src/revsynth/_speedups.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level=3))
