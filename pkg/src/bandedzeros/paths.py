"""Independent lattice-path evaluation of the trace statistics.

The recurrence graph has vertices (n, k) and edges (n, k) -> (n+1, m)
for k - down_band <= m <= k + up_band with weight entry(m, k, N).  The
trace statistics of ``bandop`` equal sums over closed walks on that
graph, which this module evaluates by direct depth-first enumeration,
never forming a matrix.  The two routes are developed independently and
compared in the tests.

Constraints on the enumerated paths:

- Constraint.NONE          all closed paths of the given length;
  divided by N this is the mean empirical moment.
- Constraint.STAY_BELOW    paths whose ordinates stay < N throughout;
  divided by N this is the zero-distribution moment.
- Constraint.MIDPOINT_AT_OR_ABOVE  closed paths of length 2 ell whose
  midpoint ordinate is >= N; divided by N^2 this is the variance.

The kernel is compiled (Cython) when available, with a pure-Python
fallback selected at import time; both traverse identically and return
bit-identical sums.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import OracleScaleError
from .recurrence import RecurrenceScheme

try:
    from . import _pathkernel as _kernel
except ImportError:  # compiled extension unavailable
    from . import _pathkernel_py as _kernel

from . import _pathkernel_py

__all__ = ["Constraint", "LatticePathQuery", "lattice_sum", "kernel_name"]

MAX_ELL = 8
MAX_N = 64


class Constraint(enum.Enum):
    """Path restriction relative to the truncation rank N."""

    NONE = "none"
    STAY_BELOW = "stay-below"
    MIDPOINT_AT_OR_ABOVE = "midpoint-at-or-above"


@dataclass(frozen=True)
class LatticePathQuery:
    """A single oracle request: closed paths of length ell (2 ell for
    the midpoint constraint) at truncation rank N."""

    N: int
    ell: int
    constraint: Constraint = Constraint.NONE
    start_range: tuple = None

    def run(self, scheme, force_python: bool = False) -> float:
        return lattice_sum(
            scheme,
            self.N,
            self.ell,
            self.constraint,
            start_range=self.start_range,
            force_python=force_python,
        )


def kernel_name() -> str:
    """Which path kernel is active ("compiled" or "python")."""
    return "compiled" if _kernel.COMPILED else "python"


def _weight_table(scheme: RecurrenceScheme, N: int, length: int) -> np.ndarray:
    r, q = scheme.down_band, scheme.up_band
    rows = N + q * length + 1
    table = np.zeros((rows, r + q + 1))
    for y in range(rows):
        for j in range(r + q + 1):
            m = y - r + j
            if 0 <= m <= y + q:
                table[y, j] = scheme.entry(m, y, N)
    return table


def lattice_sum(
    scheme: RecurrenceScheme,
    N: int,
    ell: int,
    constraint: Constraint = Constraint.NONE,
    start_range=None,
    force_python: bool = False,
) -> float:
    """Normalised weighted path count for the given constraint.

    Parameters
    ----------
    scheme : RecurrenceScheme
    N : int
        Truncation rank (enters the weights and the constraints).
    ell : int
        Moment order; paths have length ell, or 2 ell for the midpoint
        constraint.  Enumeration scale is capped at ell <= 8, N <= 64.
    constraint : Constraint
    start_range : (int, int), optional
        Half-open range of starting ordinates; defaults to [0, N).
        Useful for locating which starts contribute.
    force_python : bool
        Use the pure-Python kernel even when the compiled one is
        available (the two agree bit-for-bit).

    Returns
    -------
    float
        Path sum divided by N (NONE, STAY_BELOW) or N^2 (midpoint).
    """
    if ell < 0:
        raise OracleScaleError("need ell >= 0")
    if ell > MAX_ELL or N > MAX_N:
        raise OracleScaleError(
            f"enumeration capped at ell <= {MAX_ELL}, N <= {MAX_N}; got ell={ell}, N={N}"
        )
    if N < 1:
        raise OracleScaleError("need N >= 1")
    constraint = Constraint(constraint)
    if constraint is Constraint.MIDPOINT_AT_OR_ABOVE:
        length = 2 * ell
        mode, mid = 2, ell
        norm = N * N
    else:
        length = ell
        mode, mid = (1, 0) if constraint is Constraint.STAY_BELOW else (0, 0)
        norm = N
    if start_range is None:
        start_lo, start_hi = 0, N
    else:
        start_lo, start_hi = start_range
        if not (0 <= start_lo <= start_hi <= N):
            raise OracleScaleError(f"start range must lie in [0, {N}], got {start_range}")
    table = np.ascontiguousarray(_weight_table(scheme, N, length))
    kernel = _pathkernel_py if force_python else _kernel
    total = kernel.path_sum(
        table, N, length, start_lo, start_hi, scheme.down_band, scheme.up_band, mode, mid
    )
    return total / norm
