"""Kernel backend selection.

The compiled extension is used when it imports; set
``MULTILIN_PURE_PYTHON=1`` to force the pure-Python fallback.
"""
import os

if os.environ.get("MULTILIN_PURE_PYTHON", "").strip() not in ("", "0"):
    from multilin._kernels_py import BACKEND, bareiss_det, contract, matmul
else:
    try:
        from multilin._kernels import BACKEND, bareiss_det, contract, matmul
    except ImportError:
        from multilin._kernels_py import BACKEND, bareiss_det, contract, matmul

__all__ = ["BACKEND", "bareiss_det", "contract", "matmul"]
