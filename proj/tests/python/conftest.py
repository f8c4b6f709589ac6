import os
import shutil
import sys
import tempfile

# Stage the package: __init__.py from the source tree plus the _core module
# from the CMake build directory (ctest sets both variables).  Installed
# packages (pip) work without this.
_build_dir = os.environ.get("CCS_PYTHON_BUILD_DIR")
_src = os.environ.get("CCS_PYTHON_SRC")
if _build_dir and _src:
    _staging = tempfile.mkdtemp(prefix="ccs_pkg_")
    _pkg = os.path.join(_staging, "ccs")
    os.makedirs(_pkg)
    shutil.copy(os.path.join(_src, "ccs", "__init__.py"), _pkg)
    for name in os.listdir(_build_dir):
        if name.startswith("_core") and name.endswith((".so", ".pyd")):
            shutil.copy(os.path.join(_build_dir, name), _pkg)
    sys.path.insert(0, _staging)
