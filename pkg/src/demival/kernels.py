"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``DEMIVAL_PURE_PYTHON=1`` to force the fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
if os.environ.get("DEMIVAL_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels
else:
    _impl = _pykernels

trial_division = _impl.trial_division
norm_solutions = _impl.norm_solutions

__all__ = ["BACKEND", "trial_division", "norm_solutions"]
