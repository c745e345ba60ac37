"""Vectorized numpy implementations of the hot kernels.

This is the fallback backend used when the compiled extension is not
available (or is disabled via DPTRACK_PURE_PYTHON). Semantics, including
every tie-break, must match dptrack._kernels exactly; tests/test_kernels.py
checks the two backends against each other.
"""

from __future__ import annotations

import numpy as np


def dca_update(best_mag, best_resp, best_next_x, best_next_y, best_chan,
               resp, channel_index):
    """Fold one channel response plane into the running per-pixel winner.

    A pixel switches to `channel_index` only when the new magnitude is
    strictly greater, so on exact ties the earliest channel is kept (the
    same rule as argmax over the full response stack). Alongside the winning
    complex response the values at the right and down neighbors (periodic)
    are captured for later phase differencing.
    """
    mag = np.abs(resp)
    take = mag > best_mag
    best_mag[take] = mag[take]
    best_resp[take] = resp[take]
    best_next_x[take] = np.roll(resp, -1, axis=1)[take]
    best_next_y[take] = np.roll(resp, -1, axis=0)[take]
    best_chan[take] = channel_index


def pairwise_iou(a, b):
    """IOU matrix between two (N, 4) / (M, 4) arrays of (x, y, w, h) boxes."""
    ax1, ay1 = a[:, 0:1], a[:, 1:2]
    ax2, ay2 = ax1 + a[:, 2:3], ay1 + a[:, 3:4]
    bx1, by1 = b[None, :, 0], b[None, :, 1]
    bx2, by2 = bx1 + b[None, :, 2], by1 + b[None, :, 3]
    iw = np.minimum(ax2, bx2) - np.maximum(ax1, bx1)
    ih = np.minimum(ay2, by2) - np.maximum(ay1, by1)
    inter = np.clip(iw, 0.0, None) * np.clip(ih, 0.0, None)
    union = a[:, 2:3] * a[:, 3:4] + (b[None, :, 2] * b[None, :, 3]) - inter
    out = np.zeros((a.shape[0], b.shape[0]))
    np.divide(inter, union, out=out, where=union > 0)
    return out


def greedy_match(iou_mat, threshold):
    """Greedy one-to-one matching in descending IOU order.

    Candidate pairs with IOU >= threshold are taken best-first; ties are
    broken by lower row index, then lower column index. Returns the matched
    (rows, cols) index arrays.
    """
    ii, jj = np.nonzero(iou_mat >= threshold)
    if ii.size == 0:
        return np.empty(0, dtype=np.intp), np.empty(0, dtype=np.intp)
    vals = iou_mat[ii, jj]
    order = np.lexsort((jj, ii, -vals))
    used_i = np.zeros(iou_mat.shape[0], dtype=bool)
    used_j = np.zeros(iou_mat.shape[1], dtype=bool)
    out_i, out_j = [], []
    for k in order:
        i, j = ii[k], jj[k]
        if used_i[i] or used_j[j]:
            continue
        used_i[i] = True
        used_j[j] = True
        out_i.append(i)
        out_j.append(j)
    return np.asarray(out_i, dtype=np.intp), np.asarray(out_j, dtype=np.intp)


def assign_labels(points, centroids):
    """Index of the nearest centroid for every point (ties: lowest index)."""
    d2 = ((points[:, None, :] - centroids[None, :, :]) ** 2).sum(axis=2)
    return np.argmin(d2, axis=1).astype(np.intc)
