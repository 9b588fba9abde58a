"""Kernel dispatch: compiled extension when importable, pure Python otherwise.

Set ``PTEALG_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _kernels_py

_INT64_LIMIT = 2**62

compiled = None
if not os.environ.get("PTEALG_PURE_PYTHON"):
    try:
        from . import _kernels as compiled
    except ImportError:  # extension not built
        compiled = None

BACKEND = "compiled" if compiled is not None else "python"


def _fits_int64(size, degree, lo, hi):
    # the odometer buffer in the extension holds at most 64 entries
    return size <= 64 and size * max(abs(lo), abs(hi), 1) ** degree < _INT64_LIMIT


def _normalize(groups):
    return sorted(sorted(tuple(g) for g in group) for group in groups)


def equal_power_sum_classes(size, degree, lo, hi, backend=None):
    """Groups of multisets in ``[lo, hi]`` sharing power sums of degrees 1..degree.

    ``backend`` is ``"compiled"``, ``"python"`` or ``None`` (best available).
    Output is deterministic and identical across backends.
    """
    if lo > hi or size < 1 or degree < 1:
        return []
    use = backend or BACKEND
    if use == "compiled":
        if compiled is None:
            raise RuntimeError("compiled kernels are not available")
        if _fits_int64(size, degree, lo, hi):
            return _normalize(compiled.equal_power_sum_classes(size, degree, lo, hi))
    return _normalize(_kernels_py.equal_power_sum_classes(size, degree, lo, hi))
