"""Finite truncations of the recurrence operator and trace statistics.

For a scheme with band widths (down_band, up_band) the operator matrix
T[m, k] = entry(m, k, N) is stored on a square truncation of size
N + up_band * ell_max.  That padding makes every trace below exact:
a product of ell band steps starting below index N never reaches the
boundary of the storage, so the truncated powers agree with the
infinite operator wherever they are read.

Statistics (all per the projection pi_N onto indices < N):

- mean_moment:      (1/N) Tr(pi_N T^ell pi_N)        (mean of the
  empirical measure's ell-th moment)
- zero_moment_trace:(1/N) Tr((pi_N T pi_N)^ell)      (ell-th moment of
  the zero distribution of the average characteristic polynomial)
- variance_moment:  (1/N^2) [Tr(pi T^{2 ell} pi) - Tr((pi T^ell pi)^2)],
  computed in the exactly equivalent boundary-crossing form
  (1/N^2) sum_{k < N <= m} (T^ell)[k, m] (T^ell)[m, k], which is free of
  the O(N) cancellation between the two traces.

The gap and variance bounds multiply a path-count factor by the largest
entry magnitude in an index window around N.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SchemeError
from .recurrence import RecurrenceScheme

__all__ = [
    "BandedOperator",
    "build_truncation",
    "mean_moment",
    "zero_moment_trace",
    "variance_moment",
    "gap_bound",
    "variance_bound",
    "window_max",
    "trace_table",
]


@dataclass(frozen=True, eq=False)
class BandedOperator:
    """Dense storage of a banded operator truncation."""

    scheme: RecurrenceScheme
    N: int
    ext: int
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def block(self) -> np.ndarray:
        """Principal N x N block (the compressed operator pi_N T pi_N)."""
        return self.matrix[: self.N, : self.N]


def build_truncation(scheme: RecurrenceScheme, N: int, ell_max: int) -> BandedOperator:
    """Materialise T on indices < N + up_band * ell_max."""
    if N < 1:
        raise SchemeError(f"need N >= 1, got {N}")
    if ell_max < 0:
        raise SchemeError(f"need ell_max >= 0, got {ell_max}")
    ext = scheme.up_band * ell_max
    dim = N + ext
    matrix = np.zeros((dim, dim))
    for k in range(dim):
        lo = max(0, k - scheme.down_band)
        hi = min(dim - 1, k + scheme.up_band)
        for m in range(lo, hi + 1):
            matrix[m, k] = scheme.entry(m, k, N)
    if not np.isfinite(matrix).all():
        bad = np.argwhere(~np.isfinite(matrix))[0]
        raise SchemeError(
            f"nonfinite entry at ({bad[0]}, {bad[1]}) for scheme {scheme.name!r}, N={N}"
        )
    return BandedOperator(scheme=scheme, N=N, ext=ext, matrix=matrix)


def _diag_sum(P: np.ndarray, N: int) -> float:
    return math.fsum(P.diagonal()[:N].tolist())


def mean_moment(scheme: RecurrenceScheme, N: int, ell: int) -> float:
    """Mean of the ell-th empirical moment, (1/N) Tr(pi_N T^ell pi_N)."""
    if ell < 0:
        raise SchemeError("need ell >= 0")
    if ell == 0:
        return 1.0
    op = build_truncation(scheme, N, ell)
    P = np.linalg.matrix_power(op.matrix, ell)
    return _diag_sum(P, N) / N


def zero_moment_trace(scheme: RecurrenceScheme, N: int, ell: int) -> float:
    """ell-th moment of the zero distribution, (1/N) Tr((pi_N T pi_N)^ell)."""
    if ell < 0:
        raise SchemeError("need ell >= 0")
    if ell == 0:
        return 1.0
    block = build_truncation(scheme, N, 0).matrix
    P = np.linalg.matrix_power(block, ell)
    return _diag_sum(P, N) / N


def variance_moment(scheme: RecurrenceScheme, N: int, ell: int) -> float:
    """Variance of the ell-th empirical moment under the ensemble."""
    if ell < 0:
        raise SchemeError("need ell >= 0")
    if ell == 0:
        return 0.0
    op = build_truncation(scheme, N, 2 * ell)
    P = np.linalg.matrix_power(op.matrix, ell)
    # (T^ell)[k, m] (T^ell)[m, k] summed over k < N <= m
    cross = P[:N, N:] * P[N:, :N].T
    return math.fsum(cross.ravel().tolist()) / (N * N)


def _window_entry_max(scheme: RecurrenceScheme, N: int, lo: int, hi: int) -> float:
    lo = max(0, lo)
    if lo > hi:
        raise SchemeError("empty index window")
    best = 0.0
    for k in range(lo, hi + 1):
        m_lo = max(lo, k - scheme.down_band)
        m_hi = min(hi, k + scheme.up_band)
        for m in range(m_lo, m_hi + 1):
            best = max(best, abs(scheme.entry(m, k, N)))
    return best


def gap_bound(scheme: RecurrenceScheme, N: int, ell: int) -> float:
    """Upper bound on |mean_moment - zero_moment_trace|.

    (2 q ell)^ell / N times the ell-th power of the largest entry
    magnitude in the window |k - N| <= q ell, |m - N| <= q ell.
    """
    if ell < 1:
        raise SchemeError("need ell >= 1")
    q = scheme.up_band
    w = q * ell
    peak = _window_entry_max(scheme, N, N - w, N + w)
    return (2 * q * ell) ** ell / N * peak**ell


def variance_bound(scheme: RecurrenceScheme, N: int, ell: int) -> float:
    """Upper bound on variance_moment.

    (4 q ell)^(2 ell) / N^2 times the (2 ell)-th power of the largest
    entry magnitude in the window of radius 2 q ell around N.
    """
    if ell < 1:
        raise SchemeError("need ell >= 1")
    q = scheme.up_band
    w = 2 * q * ell
    peak = _window_entry_max(scheme, N, N - w, N + w)
    return (4 * q * ell) ** (2 * ell) / (N * N) * peak ** (2 * ell)


def window_max(scheme: RecurrenceScheme, N: int, eps: float) -> float:
    """Largest |entry(m, k, N)| over |k/N - 1| <= eps, |m/N - 1| <= eps."""
    if eps <= 0:
        raise SchemeError("need eps > 0")
    lo = math.ceil(N * (1 - eps) - 1e-9)
    hi = math.floor(N * (1 + eps) + 1e-9)
    return _window_entry_max(scheme, N, lo, hi)


def trace_table(scheme: RecurrenceScheme, N: int, ell_max: int):
    """Rows (N, ell, mean, zero_side, gap, gap_bound, variance,
    variance_bound) for ell = 1..ell_max."""
    rows = []
    for ell in range(1, ell_max + 1):
        mean = mean_moment(scheme, N, ell)
        zero = zero_moment_trace(scheme, N, ell)
        rows.append(
            (
                N,
                ell,
                mean,
                zero,
                abs(mean - zero),
                gap_bound(scheme, N, ell),
                variance_moment(scheme, N, ell),
                variance_bound(scheme, N, ell),
            )
        )
    return rows
