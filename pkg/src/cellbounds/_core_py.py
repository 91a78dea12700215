"""Numpy fallbacks for the compiled kernels in ``_core.pyx``.

Pairwise work is chunked so memory stays bounded for large samples.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 512


def matern_keep_mask(x, y, age, radius, out):
    n = x.shape[0]
    r2 = radius * radius
    idx = np.arange(n)
    d2 = np.empty((min(_CHUNK, n), n))
    tmp = np.empty_like(d2)
    kill = np.empty(d2.shape, dtype=bool)
    for lo in range(0, n, _CHUNK):
        hi = min(lo + _CHUNK, n)
        m = hi - lo
        np.subtract(x[lo:hi, None], x[None, :], out=d2[:m])
        np.multiply(d2[:m], d2[:m], out=d2[:m])
        np.subtract(y[lo:hi, None], y[None, :], out=tmp[:m])
        np.multiply(tmp[:m], tmp[:m], out=tmp[:m])
        d2[:m] += tmp[:m]
        np.less(d2[:m], r2, out=kill[:m])
        older = (age[None, :] < age[lo:hi, None]) | (
            (age[None, :] == age[lo:hi, None]) & (idx[None, :] < idx[lo:hi, None])
        )
        kill[:m] &= older
        out[lo:hi] = ~kill[:m].any(axis=1)
    return n


def min_same_mark_sq_dist(x, y, marks):
    best = np.inf
    for m in np.unique(marks):
        sel = marks == m
        xs = x[sel]
        ys = y[sel]
        k = xs.shape[0]
        if k < 2:
            continue
        cols = np.arange(k)
        for lo in range(0, k, _CHUNK):
            hi = min(lo + _CHUNK, k)
            dx = xs[lo:hi, None] - xs[None, :]
            dy = ys[lo:hi, None] - ys[None, :]
            d2 = dx * dx + dy * dy
            # keep each unordered pair once
            d2[cols[None, :] <= cols[lo:hi, None]] = np.inf
            best = min(best, float(d2.min()))
    return best


def bounded_power_law_sum(x, y, px, py, alpha, exclude):
    dx = x - px
    dy = y - py
    d2 = dx * dx + dy * dy
    att = np.ones_like(d2)
    far = d2 > 1.0
    att[far] = d2[far] ** (-0.5 * alpha)
    total = float(att.sum())
    if 0 <= exclude < att.shape[0]:
        total -= float(att[exclude])
    return total
