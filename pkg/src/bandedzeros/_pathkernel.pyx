# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled lattice-path summation kernel.

Mirror of ``_pathkernel_py.py``: identical traversal order and identical
floating-point accumulation order, so the two produce bit-identical
results.  Keep the implementations in sync.
"""

COMPILED = True


cdef double _dfs(const double[:, ::1] weights, int y, int i, int length,
                 int k_end, int n_rank, int r_down, int q_up,
                 int mode, int mid, double prod) noexcept nogil:
    cdef double total = 0.0
    cdef double w
    cdef int j, y2, rem
    if mode == 2 and i == mid and y < n_rank:
        return 0.0
    if i == length:
        return prod
    rem = length - i - 1
    for j in range(r_down + q_up + 1):
        y2 = y - r_down + j
        if y2 < 0:
            continue
        w = weights[y, j]
        if w == 0.0:
            continue
        if y2 - k_end > r_down * rem:
            continue
        if k_end - y2 > q_up * rem:
            continue
        if mode == 1 and y2 >= n_rank:
            continue
        if mode == 2 and i + 1 <= mid and y2 + q_up * (mid - i - 1) < n_rank:
            continue
        total += _dfs(weights, y2, i + 1, length, k_end, n_rank, r_down,
                      q_up, mode, mid, prod * w)
    return total


def path_sum(const double[:, ::1] weights, int n_rank, int length,
             int start_lo, int start_hi, int r_down, int q_up,
             int mode, int mid):
    """Sum of path weights over starting ordinates start_lo <= k < start_hi."""
    cdef double total = 0.0
    cdef int k
    with nogil:
        for k in range(start_lo, start_hi):
            total += _dfs(weights, k, 0, length, k, n_rank, r_down, q_up,
                          mode, mid, 1.0)
    return total
