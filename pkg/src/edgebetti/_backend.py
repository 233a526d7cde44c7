"""Pick the compiled kernels when importable, else the pure-Python ones.

Set ``EDGEBETTI_PURE=1`` to force the fallback (used by the benchmark and
the backend-agreement tests).
"""

from __future__ import annotations

import os

from . import _pure

kernels = _pure
COMPILED = False

if not os.environ.get("EDGEBETTI_PURE"):
    try:
        from . import _kernels
    except ImportError:  # pragma: no cover - depends on the build
        pass
    else:
        kernels = _kernels
        COMPILED = True

NAME = "compiled" if COMPILED else "pure"

# dense elimination below this many columns, column-sparse above
DENSE_COLUMN_LIMIT = 2000
