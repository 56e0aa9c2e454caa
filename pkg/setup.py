from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "selftune_fa._engine",
                ["src/selftune_fa/_engine.pyx"],
                extra_compile_args=["-O3"],
                language="c",
            )
        ],
        language_level=3,
    )
)
