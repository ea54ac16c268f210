from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "gaitmode._speedups",
                ["src/gaitmode/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ]
    )
except ImportError:
    # pure-Python fallback backend still works without the extension
    ext_modules = []

setup(ext_modules=ext_modules)
