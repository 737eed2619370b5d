"""Build the acfg._acfg extension with setuptools + pybind11.

The C++ core is compiled directly into the extension module; the CMake
build remains the path for the CLI and the test binaries.
"""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

CORE_SOURCES = [
    "src/bigint.cpp",
    "src/graph.cpp",
    "src/partition.cpp",
    "src/enumerate.cpp",
    "src/valuation.cpp",
    "src/stability.cpp",
    "src/search.cpp",
    "src/properties.cpp",
    "src/instances.cpp",
]

ext_modules = [
    Pybind11Extension(
        "acfg._acfg",
        sources=["python/bindings.cpp"] + CORE_SOURCES,
        include_dirs=["include", "vendor"],
        cxx_std=20,
    )
]

setup(
    packages=["acfg"],
    package_dir={"": "python"},
    ext_modules=ext_modules,
    cmdclass={"build_ext": build_ext},
)
