# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels.

Mirror of dptrack._purepy with fused loops instead of whole-plane numpy
temporaries. Tie-break rules are identical: strict comparisons everywhere,
so the earliest candidate (channel, row-major pair, centroid index) wins.
"""

import numpy as np


def dca_update(double[:, ::1] best_mag,
               double complex[:, ::1] best_resp,
               double complex[:, ::1] best_next_x,
               double complex[:, ::1] best_next_y,
               int[:, ::1] best_chan,
               double complex[:, ::1] resp,
               int channel_index):
    cdef Py_ssize_t h = best_mag.shape[0]
    cdef Py_ssize_t w = best_mag.shape[1]
    cdef Py_ssize_t i, j, inext, jnext
    cdef double m
    for i in range(h):
        inext = i + 1 if i + 1 < h else 0
        for j in range(w):
            m = abs(resp[i, j])
            if m > best_mag[i, j]:
                jnext = j + 1 if j + 1 < w else 0
                best_mag[i, j] = m
                best_resp[i, j] = resp[i, j]
                best_next_x[i, j] = resp[i, jnext]
                best_next_y[i, j] = resp[inext, j]
                best_chan[i, j] = channel_index


def pairwise_iou(double[:, ::1] a, double[:, ::1] b):
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t m = b.shape[0]
    out_arr = np.zeros((n, m))
    cdef double[:, ::1] out = out_arr
    cdef Py_ssize_t i, j
    cdef double ax1, ay1, ax2, ay2, area_a
    cdef double iw, ih, inter, union
    for i in range(n):
        ax1 = a[i, 0]
        ay1 = a[i, 1]
        ax2 = ax1 + a[i, 2]
        ay2 = ay1 + a[i, 3]
        area_a = a[i, 2] * a[i, 3]
        for j in range(m):
            iw = min(ax2, b[j, 0] + b[j, 2]) - max(ax1, b[j, 0])
            if iw <= 0:
                continue
            ih = min(ay2, b[j, 1] + b[j, 3]) - max(ay1, b[j, 1])
            if ih <= 0:
                continue
            inter = iw * ih
            union = area_a + b[j, 2] * b[j, 3] - inter
            if union > 0:
                out[i, j] = inter / union
    return out_arr


def greedy_match(double[:, ::1] iou_mat, double threshold):
    cdef Py_ssize_t n = iou_mat.shape[0]
    cdef Py_ssize_t m = iou_mat.shape[1]
    cdef Py_ssize_t cap = n if n < m else m
    used_i_arr = np.zeros(n, dtype=np.uint8)
    used_j_arr = np.zeros(m, dtype=np.uint8)
    out_i_arr = np.empty(cap, dtype=np.intp)
    out_j_arr = np.empty(cap, dtype=np.intp)
    cdef unsigned char[::1] used_i = used_i_arr
    cdef unsigned char[::1] used_j = used_j_arr
    cdef Py_ssize_t[::1] out_i = out_i_arr
    cdef Py_ssize_t[::1] out_j = out_j_arr
    cdef Py_ssize_t count = 0
    cdef Py_ssize_t i, j, bi, bj
    cdef double best, v
    while count < cap:
        bi = -1
        bj = -1
        best = 0.0
        # row-major scan with strict > keeps the lowest (i, j) on ties,
        # matching sort order (-iou, i, j)
        for i in range(n):
            if used_i[i]:
                continue
            for j in range(m):
                if used_j[j]:
                    continue
                v = iou_mat[i, j]
                if v >= threshold and (bi < 0 or v > best):
                    best = v
                    bi = i
                    bj = j
        if bi < 0:
            break
        used_i[bi] = 1
        used_j[bj] = 1
        out_i[count] = bi
        out_j[count] = bj
        count += 1
    return out_i_arr[:count], out_j_arr[:count]


def assign_labels(double[:, ::1] points, double[:, ::1] centroids):
    cdef Py_ssize_t n = points.shape[0]
    cdef Py_ssize_t k = centroids.shape[0]
    cdef Py_ssize_t d = points.shape[1]
    labels_arr = np.empty(n, dtype=np.intc)
    cdef int[::1] labels = labels_arr
    cdef Py_ssize_t i, c, t
    cdef double dist, diff, best
    cdef int best_c
    for i in range(n):
        best = -1.0
        best_c = 0
        for c in range(k):
            dist = 0.0
            for t in range(d):
                diff = points[i, t] - centroids[c, t]
                dist += diff * diff
            if best < 0 or dist < best:
                best = dist
                best_c = c
        labels[i] = best_c
    return labels_arr
