"""CMake-driven build for the wlcs._core extension.

The extension and the static core live in the CMake project; this shim runs
CMake from setuptools so `pip install -e . --no-build-isolation` works without
a separate build-system dependency.
"""

import os
import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                f"-DCMAKE_BUILD_TYPE={'Debug' if self.debug else 'Release'}",
                "-DWLCS_PYTHON=ON",
                f"-DPython3_EXECUTABLE={sys.executable}",
            ],
            check=True,
        )
        subprocess.run(
            [
                "cmake", "--build", str(build_dir),
                "--target", "wlcs_py",
                "-j", str(os.cpu_count() or 2),
            ],
            check=True,
        )

        staged = build_dir / "python" / "wlcs"
        built = sorted(staged.glob("_core*.so")) + sorted(staged.glob("_core*.pyd"))
        if not built:
            raise RuntimeError(f"extension not produced under {staged}")
        target = Path(self.get_ext_fullpath(ext.name)).resolve()
        target.parent.mkdir(parents=True, exist_ok=True)
        shutil.copy2(built[-1], target)


setup(
    ext_modules=[CMakeExtension("wlcs._core")],
    cmdclass={"build_ext": CMakeBuild},
)
