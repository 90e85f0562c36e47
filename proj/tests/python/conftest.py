import os
import sys

# ctest points this at the freshly built module; drop any editable-install redirect so it wins
_build_dir = os.environ.get("EXPRINGS_PYTHON_DIR")
if _build_dir:
    sys.meta_path[:] = [f for f in sys.meta_path if "exprings" not in type(f).__module__]
    sys.path.insert(0, _build_dir)

import exprings  # noqa: E402


def pytest_report_header():
    return f"exprings module: {exprings._core.__file__}"
