"""Backend selection for the hot kernels.

The compiled Cython extension is preferred when it imported cleanly;
otherwise the numpy fallback is used. Setting DPTRACK_PURE_PYTHON=1 in the
environment forces the fallback regardless of what is installed. Both
backends implement the same four operations with identical semantics:

    dca_update     streaming per-pixel dominant-channel selection
    pairwise_iou   IOU matrix between two box arrays
    greedy_match   descending-IOU one-to-one matching
    assign_labels  nearest-centroid assignment

benchmarks/bench_kernels.py times one backend against the other.
"""

from __future__ import annotations

import os

import numpy as np

if os.environ.get("DPTRACK_PURE_PYTHON"):
    from . import _purepy as _impl

    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _purepy as _impl

        BACKEND = "python"


def dca_update(best_mag, best_resp, best_next_x, best_next_y, best_chan,
               resp, channel_index):
    _impl.dca_update(best_mag, best_resp, best_next_x, best_next_y,
                     best_chan, resp, channel_index)


def pairwise_iou(boxes_a, boxes_b) -> np.ndarray:
    a = np.ascontiguousarray(boxes_a, dtype=np.float64).reshape(-1, 4)
    b = np.ascontiguousarray(boxes_b, dtype=np.float64).reshape(-1, 4)
    if a.shape[0] == 0 or b.shape[0] == 0:
        return np.zeros((a.shape[0], b.shape[0]))
    return np.asarray(_impl.pairwise_iou(a, b))


def greedy_match(iou_mat, threshold: float):
    m = np.ascontiguousarray(iou_mat, dtype=np.float64)
    if m.size == 0:
        return np.empty(0, dtype=np.intp), np.empty(0, dtype=np.intp)
    rows, cols = _impl.greedy_match(m, float(threshold))
    return np.asarray(rows, dtype=np.intp), np.asarray(cols, dtype=np.intp)


def assign_labels(points, centroids) -> np.ndarray:
    p = np.ascontiguousarray(points, dtype=np.float64)
    c = np.ascontiguousarray(centroids, dtype=np.float64)
    return np.asarray(_impl.assign_labels(p, c), dtype=np.intc)
