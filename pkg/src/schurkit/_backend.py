"""Select the LR counting kernel at import time.

The compiled extension is used when it was built; setting
``SCHURKIT_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
from __future__ import annotations

import os

from . import _lr_py

python_count_lr = _lr_py.count_lr

try:
    from ._lr_kernel import count_lr as compiled_count_lr
except ImportError:  # extension not built
    compiled_count_lr = None

if compiled_count_lr is not None and not os.environ.get("SCHURKIT_PURE_PYTHON"):
    count_lr = compiled_count_lr
    BACKEND = "cython"
else:
    count_lr = python_count_lr
    BACKEND = "python"
