"""Backend selection for the sweep kernels.

Prefers the compiled extension when it was built; otherwise the NumPy
implementation takes over transparently. FIDBOUND_PURE_PYTHON=1 forces the
fallback (used by the benchmark and the parity tests).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("FIDBOUND_PURE_PYTHON") == "1":
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

COHERENT = _kernels_py.COHERENT
SQUEEZED = _kernels_py.SQUEEZED
NEGBIN = _kernels_py.NEGBIN
BINOMIAL = _kernels_py.BINOMIAL

FAMILY_CODES = {
    "coherent": COHERENT,
    "squeezed": SQUEEZED,
    "negbin": NEGBIN,
    "binomial": BINOMIAL,
}

objective_grid = _impl.objective_grid
objective_at = _impl.objective_at


def backend() -> str:
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return "python" if _impl is _kernels_py else "compiled"
