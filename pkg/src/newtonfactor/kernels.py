"""Pick the compiled search kernels when available, else the pure-Python ones.

Set ``NEWTONFACTOR_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("NEWTONFACTOR_PURE_PYTHON") == "1":
    from ._kernels_py import CAPPED, FOUND, NOT_FOUND, search_factor, search_pair

    BACKEND = "python"
else:
    try:
        from ._kernels import CAPPED, FOUND, NOT_FOUND, search_factor, search_pair

        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._kernels_py import CAPPED, FOUND, NOT_FOUND, search_factor, search_pair

        BACKEND = "python"

__all__ = ["BACKEND", "CAPPED", "FOUND", "NOT_FOUND", "search_factor", "search_pair"]
