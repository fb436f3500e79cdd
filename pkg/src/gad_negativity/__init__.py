"""Two-qubit entanglement under generalized amplitude damping noise."""

import sys
from importlib.metadata import PackageNotFoundError, metadata, version
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

__all__ = ["__package_name__", "__version__"]

# Try to get package name from pyproject.toml first
try:
    pyproject_path = Path(__file__).parent.parent.parent / "pyproject.toml"
    if pyproject_path.exists():
        with pyproject_path.open("rb") as f:
            __package_name__ = tomllib.load(f)["project"]["name"]
    else:
        __package_name__ = "gad-negativity"
except (OSError, KeyError, tomllib.TOMLDecodeError):
    __package_name__ = "gad-negativity"

# Fetch metadata from installed package
try:
    __version__ = version(__package_name__)
    __author__ = metadata(__package_name__).get("Author", "Unknown")
except PackageNotFoundError:
    # Fallback for development/editable installs
    __version__ = "0.0.0"
    __author__ = "Unknown"
