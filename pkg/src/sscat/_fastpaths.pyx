# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel.

Twin of the pure-Python `_pypaths`; both expose the same
`stat_histograms` function and must produce identical results.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memset


cdef void _rec(
    int depth, int total, int n, int k, int g, int gmax, int prev, int peaks,
    int up, int down_start, int *coeffs, int *counts,
    long long *height_hist, long long *peak_hist,
) noexcept:
    cdef int d, g2, gmax2, p2
    if depth == total:
        height_hist[gmax] += 1
        peak_hist[peaks] += 1
        return
    for d in range(1, k + 1):
        if counts[d] >= n or (d > 1 and counts[d] >= counts[d - 1]):
            continue
        g2 = g + coeffs[d - 1]
        gmax2 = g2 if g2 > gmax else gmax
        p2 = peaks + (1 if prev and prev <= up and d >= down_start else 0)
        counts[d] += 1
        _rec(depth + 1, total, n, k, g2, gmax2, d, p2,
             up, down_start, coeffs, counts, height_hist, peak_hist)
        counts[d] -= 1


def stat_histograms(int k, int n):
    """Histograms of (maximum semisymmetric height, semisymmetric peak
    count) over all balanced ballot paths of length k*n.

    Returns (height_histogram, peak_histogram), each a dict from statistic
    value to the number of paths attaining it.
    """
    if k < 2 or n < 0:
        raise ValueError(f"need k >= 2 and n >= 0, got k={k}, n={n}")
    if n == 0:
        return {0: 1}, {0: 1}
    cdef int total = k * n
    cdef int max_h = (k // 2) * ((k + 1) // 2) * n
    cdef int i
    cdef int *coeffs = <int *> calloc(k, sizeof(int))
    cdef int *counts = <int *> calloc(k + 1, sizeof(int))
    cdef long long *height_hist = <long long *> calloc(max_h + 1, sizeof(long long))
    cdef long long *peak_hist = <long long *> calloc(total + 1, sizeof(long long))
    if not coeffs or not counts or not height_hist or not peak_hist:
        free(coeffs); free(counts); free(height_hist); free(peak_hist)
        raise MemoryError()
    for i in range(k):
        coeffs[i] = k + 1 - 2 * (i + 1)
    try:
        _rec(0, total, n, k, 0, 0, 0, 0,
             k // 2, (k + 1) // 2 + 1, coeffs, counts, height_hist, peak_hist)
        heights = {i: height_hist[i] for i in range(max_h + 1) if height_hist[i]}
        peaks = {i: peak_hist[i] for i in range(total + 1) if peak_hist[i]}
    finally:
        free(coeffs); free(counts); free(height_hist); free(peak_hist)
    return heights, peaks
