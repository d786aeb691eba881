"""Backend selection for the triple-store core.

Prefers the compiled extension when importing it succeeds; set the
MMODS_PURE_PYTHON environment variable (to any non-empty value) to force the
pure Python implementation.
"""

from __future__ import annotations

import os

if os.environ.get("MMODS_PURE_PYTHON"):
    from . import _core_py as core

    BACKEND = "python"
else:
    try:
        from . import _core as core  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as core

        BACKEND = "python"

TripleStore = core.TripleStore
saturate = core.saturate
WILDCARD = -1
