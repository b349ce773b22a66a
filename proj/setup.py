import glob

from pybind11.setup_helpers import ParallelCompile, Pybind11Extension, build_ext
from setuptools import setup

ParallelCompile("NPY_NUM_BUILD_JOBS", default=4).install()

sources = sorted(glob.glob("src/*.cpp")) + ["bindings/module.cpp"]

ext = Pybind11Extension(
    "qcblock._core",
    sources=sources,
    include_dirs=["include", "vendor"],
    cxx_std=20,
    extra_compile_args=["-O2"],
)

setup(
    packages=["qcblock"],
    package_dir={"": "python"},
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
    zip_safe=False,
)
