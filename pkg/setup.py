import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    # No -ffast-math: the kernels rely on strict IEEE semantics for the
    # compensated (fma/two-product) accumulation paths.
    ext_modules = cythonize(
        [
            Extension(
                "spinorlab._core",
                ["src/spinorlab/_core.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
