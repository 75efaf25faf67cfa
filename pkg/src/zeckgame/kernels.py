"""Playout kernel selection: compiled extension if built, else pure Python.

Both kernels implement the same sequence of games for the same seed, so
which one is active never changes results, only throughput. Set
ZECKGAME_FORCE_PY_KERNEL=1 to force the fallback (used by the benchmark
and the kernel-equivalence tests).
"""

from __future__ import annotations

import os

from . import _kernel_py

if os.environ.get("ZECKGAME_FORCE_PY_KERNEL") == "1":
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from . import _kernel_c as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

random_playout_length = _impl.random_playout_length
random_playout_lengths = _impl.random_playout_lengths
pure_python = _kernel_py
