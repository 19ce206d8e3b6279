import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SCHURKIT_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("schurkit._lr_kernel", ["src/schurkit/_lr_kernel.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
