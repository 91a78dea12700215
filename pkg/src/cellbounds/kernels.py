"""Hot-loop kernels with a compiled core and a numpy fallback.

The Cython extension ``cellbounds._core`` is optional: when it is missing
(or ``CELLBOUNDS_PURE_PYTHON=1`` is set) the numpy implementations in
``_core_py`` are used instead.  Both backends produce identical masks and
counts; floating-point sums may differ by rounding order only.
``benchmarks/bench_kernels.py`` compares their speed.
"""

from __future__ import annotations

import os

import numpy as np

from . import _core_py

if os.environ.get("CELLBOUNDS_PURE_PYTHON"):
    _core = None
else:
    try:
        from . import _core  # type: ignore[attr-defined]
    except ImportError:
        _core = None

BACKEND = "compiled" if _core is not None else "python"
_impl = _core if _core is not None else _core_py


def _columns(points):
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    x = np.ascontiguousarray(pts[:, 0])
    y = np.ascontiguousarray(pts[:, 1])
    return x, y


def matern_keep_mask(points, ages, radius: float) -> np.ndarray:
    """Boolean retention mask of the Matern type-II thinning."""
    x, y = _columns(points)
    age = np.ascontiguousarray(np.asarray(ages, dtype=np.float64))
    if age.shape[0] != x.shape[0]:
        raise ValueError("ages and points must have equal length")
    out = np.zeros(x.shape[0], dtype=np.uint8)
    _impl.matern_keep_mask(x, y, age, float(radius), out)
    return out.astype(bool)


def min_same_mark_sq_dist(points, marks) -> float:
    """Smallest squared distance among same-mark pairs; inf if none exist."""
    x, y = _columns(points)
    mk = np.ascontiguousarray(np.asarray(marks, dtype=np.int64))
    if mk.shape[0] != x.shape[0]:
        raise ValueError("marks and points must have equal length")
    return float(_impl.min_same_mark_sq_dist(x, y, mk))


def bounded_power_law_sum(points, origin, alpha: float, exclude: int = -1) -> float:
    """Sum of min(1, d^-alpha) from origin over points, skipping ``exclude``."""
    x, y = _columns(points)
    px, py = float(origin[0]), float(origin[1])
    return float(_impl.bounded_power_law_sum(x, y, px, py, float(alpha),
                                             int(exclude)))
