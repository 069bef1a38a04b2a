"""Kernel backend selection: compiled extension if available, numpy fallback.

The only hot kernel is the pointwise Clifford contraction (256 sign-weighted
component products per lattice point).  Set ``DDIRAC_BACKEND=python`` or
``DDIRAC_BACKEND=compiled`` to force a backend; the default (``auto``) uses
the compiled extension when the build produced one.
"""

from __future__ import annotations

import os

import numpy as np

try:
    from . import _kernels as _compiled
except ImportError:
    _compiled = None

_requested = os.environ.get("DDIRAC_BACKEND", "auto").lower()
if _requested not in ("auto", "compiled", "python"):
    raise RuntimeError(f"DDIRAC_BACKEND must be auto|compiled|python, got {_requested!r}")
if _requested == "compiled" and _compiled is None:
    raise RuntimeError("DDIRAC_BACKEND=compiled but the extension is not built")

USE_COMPILED = _compiled is not None and _requested != "python"


def backend_name() -> str:
    return "compiled" if USE_COMPILED else "python"


def clifford_contract_python(a, b, slot_a, slot_b, slot_out, signs):
    out = np.zeros_like(a)
    for t in range(len(signs)):
        out[slot_out[t]] += signs[t] * a[slot_a[t]] * b[slot_b[t]]
    return out


def clifford_contract(a, b, slot_a, slot_b, slot_out, signs):
    """Pointwise contraction of (16, npts) component arrays a and b."""
    if USE_COMPILED:
        return _compiled.clifford_contract(
            np.ascontiguousarray(a), np.ascontiguousarray(b),
            slot_a, slot_b, slot_out, signs)
    return clifford_contract_python(a, b, slot_a, slot_b, slot_out, signs)
