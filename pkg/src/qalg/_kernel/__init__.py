"""Kernel backend selection.

Prefers the compiled extension when it is importable, falling back to the
pure-Python implementation.  Set QALG_KERNEL=py or QALG_KERNEL=c to force a
backend (forcing "c" raises if the extension was not built).
"""

import os

from . import _poly_py

_forced = os.environ.get("QALG_KERNEL", "").strip().lower()

if _forced == "py":
    kernel = _poly_py
elif _forced == "c":
    from . import _poly_c as kernel
else:
    try:
        from . import _poly_c as kernel
    except ImportError:
        kernel = _poly_py

BACKEND = kernel.BACKEND
FIELD_BITS = kernel.FIELD_BITS
