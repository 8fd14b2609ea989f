from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "bireg._bireg",
    sources=[
        "src/rational.cpp",
        "src/clifford.cpp",
        "src/mvpoly.cpp",
        "src/generators.cpp",
        "src/axial.cpp",
        "src/fueter.cpp",
        "src/numeric.cpp",
        "src/json_io.cpp",
        "python/bindings.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
