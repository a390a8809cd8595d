"""Pure-Python lattice-path summation kernel.

Mirror of the compiled kernel in ``_pathkernel.pyx``: identical
traversal order and identical floating-point accumulation order, so the
two produce bit-identical results.  Keep the implementations in sync.

A path of given length starts and ends at the same ordinate k and moves
through nonnegative ordinates, each step y -> y2 restricted to
y - r_down <= y2 <= y + q_up with multiplicative weight weights[y, j]
where j = y2 - y + r_down.  Modes: 0 sums all paths, 1 keeps paths
whose ordinates stay below n_rank throughout, 2 keeps paths whose
ordinate at step ``mid`` is at least n_rank.
"""

COMPILED = False


def _dfs(weights, y, i, length, k_end, n_rank, r_down, q_up, mode, mid, prod):
    if mode == 2 and i == mid and y < n_rank:
        return 0.0
    if i == length:
        return prod
    total = 0.0
    rem = length - i - 1
    row = weights[y]
    for j in range(r_down + q_up + 1):
        y2 = y - r_down + j
        if y2 < 0:
            continue
        w = row[j]
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
        total += _dfs(
            weights, y2, i + 1, length, k_end, n_rank, r_down, q_up, mode, mid, prod * w
        )
    return total


def path_sum(weights, n_rank, length, start_lo, start_hi, r_down, q_up, mode, mid):
    """Sum of path weights over starting ordinates start_lo <= k < start_hi."""
    rows = [list(map(float, row)) for row in weights]
    total = 0.0
    for k in range(start_lo, start_hi):
        total += _dfs(rows, k, 0, length, k, n_rank, r_down, q_up, mode, mid, 1.0)
    return total
