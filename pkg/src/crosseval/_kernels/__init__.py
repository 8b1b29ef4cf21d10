"""Gibbs kernel backend selection.

Imports the compiled extension when present, falling back to the pure-Python
twin. ``CROSSEVAL_PURE_PYTHON=1`` forces the fallback, which is how the
benchmark and the backend-equivalence test obtain both implementations in one
process.
"""

from __future__ import annotations

import os

from . import gibbs_py

if os.environ.get("CROSSEVAL_PURE_PYTHON") == "1":
    _impl = gibbs_py
else:
    try:
        from . import _gibbs as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = gibbs_py

BACKEND: str = _impl.BACKEND
gibbs_sweep = _impl.gibbs_sweep
infer_sweep = _impl.infer_sweep

__all__ = ["BACKEND", "gibbs_sweep", "infer_sweep", "gibbs_py"]
