"""Spectra of compressed operators and zero-distribution statistics.

The zeros of the average characteristic polynomial at rank N are the
eigenvalues of the principal N x N block pi_N T pi_N.  Symmetric
tridiagonal blocks go through the specialised LAPACK solver; everything
else through the general eigenvalue solver.  Eigenvalues are reported
sorted by real part, then imaginary part.

Moments of the zero distribution are averages of Re(z^ell); the
imaginary residual |mean Im(z^ell)| is surfaced alongside rather than
silently dropped, so a complex-contaminated spectrum is visible.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .bandop import BandedOperator
from .errors import CharpolyOverflow, NumericalFailure, SchemeError
from .measures import MomentSequence

__all__ = [
    "SpectralMeasure",
    "spectrum",
    "zero_moments",
    "reality_check",
    "charpoly_eval",
]


@dataclass(frozen=True)
class SpectralMeasure:
    """Eigenvalues of a compressed operator, each carrying weight 1/N."""

    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=complex)
        order = np.lexsort((pts.imag, pts.real))
        object.__setattr__(self, "points", pts[order])

    def __len__(self):
        return len(self.points)


def _balanced_eigvals(block: np.ndarray) -> np.ndarray:
    """Eigenvalues after a diagonal similarity symmetrising the unit band.

    QR on the raw truncation is useless here: the matrix is badly
    nonnormal and its computed eigenvalues can sit O(1) off the real
    axis by N of a few hundred.  Scaling row/column k by the running
    product of sqrt(T[k, k+1]) makes the dominant band symmetric and
    leaves only the outer bands nonnormal, which is enough for the
    eigenvalues to serve as starting points for root polishing.
    """
    n = block.shape[0]
    logd = np.zeros(n)
    for k in range(n - 1):
        w = block[k, k + 1].real
        logd[k + 1] = logd[k] + (0.5 * math.log(w) if w > 0 else 0.0)
    d = np.exp(logd - logd.mean())
    return scipy.linalg.eigvals((d[:, None] * block) / d[None, :])


def _charpoly_pair(T: np.ndarray, N: int, R: int, zs: np.ndarray):
    """(p, p')(z) for p(z) = det(z - T_N), vectorised over ``zs``.

    Same minor recurrence as ``charpoly_eval`` run jointly with its
    z-derivative.  Both values carry a common per-point normalisation
    (dropped), so only their ratio is meaningful to callers.
    """
    m = len(zs)
    win = [np.zeros(m, dtype=complex) for _ in range(R + 2)]
    dwin = [np.zeros(m, dtype=complex) for _ in range(R + 2)]
    win[-1][:] = 1.0
    for j in range(N):
        shift = zs - T[j, j]
        val = shift * win[-1]
        dval = win[-1] + shift * dwin[-1]
        sub_prod = 1.0
        for back in range(1, R + 1):
            i = j - back
            if i < 0:
                break
            sub_prod *= T[i + 1, i]
            c = T[i, j]
            if c != 0.0:
                val -= c * sub_prod * win[-1 - back]
                dval -= c * sub_prod * dwin[-1 - back]
        win = win[1:] + [val]
        dwin = dwin[1:] + [dval]
        scale = np.abs(win[-1])
        for w in win[:-1]:
            np.maximum(scale, np.abs(w), out=scale)
        for w in dwin:
            np.maximum(scale, np.abs(w), out=scale)
        np.maximum(scale, 2.0**-512, out=scale)
        for w in win:
            w /= scale
        for w in dwin:
            w /= scale
    return win[-1], dwin[-1]


def _polish_roots(op: BandedOperator, guesses: np.ndarray) -> np.ndarray:
    """Simultaneous Newton (Aberth) iteration on the characteristic
    polynomial, starting from eigenvalue estimates.

    The iteration runs in the complex plane with no reality constraint:
    spectra that are genuinely complex stay complex, while real zeros
    are resolved to full precision even when the eigensolver could not.
    """
    T = op.matrix
    N = op.N
    R = op.scheme.down_band
    z = np.array(guesses, dtype=complex)
    # Aberth needs pairwise-distinct iterates.
    span = max(1.0, float(np.max(np.abs(z))))
    order = np.lexsort((z.imag, z.real))
    for a, b in zip(order[:-1], order[1:]):
        if z[b] == z[a]:
            z[b] += 1e-9 * span * (1.0 + 1.0j)
    last = math.inf
    for _ in range(80):
        v, dv = _charpoly_pair(T, N, R, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        # keep the repulsion finite when iterates collide (which happens
        # for genuinely multiple roots): spread the pair a few ulps
        colliding = np.abs(diff) < 2.0**-46 * span
        if colliding.any():
            for i, j in np.argwhere(colliding):
                if i < j:
                    z[j] += 2.0**-44 * span * (1.0 + 1.0j)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
        repel = (1.0 / diff).sum(axis=1)
        denom = dv - repel * v
        step = np.divide(v, denom, out=np.zeros_like(v), where=denom != 0)
        z -= step
        last = float(np.max(np.abs(step)))
        if last <= 1e-14 * span:
            break
    if not (last <= 1e-9 * span) or not np.isfinite(z).all():
        raise NumericalFailure(
            f"zero polishing stalled (last correction {last:.2e}); "
            "the characteristic polynomial may have clustered roots"
        )
    return z


def spectrum(op: BandedOperator) -> SpectralMeasure:
    """Zeros of the rank-N average characteristic polynomial, i.e. the
    eigenvalues of the principal N x N block of the truncation.

    Symmetric tridiagonal blocks go straight to the specialised solver.
    Nonsymmetric banded blocks are solved in two stages: a balanced
    eigendecomposition for estimates, then a simultaneous root polish
    on the characteristic polynomial, which the banded structure lets
    us evaluate stably in O(N) per point.
    """
    block = op.block()
    scheme = op.scheme
    try:
        if scheme.symmetric and scheme.down_band == 1 and scheme.up_band == 1:
            d = block.diagonal().copy().real
            e = block.diagonal(-1).copy().real
            if len(d) == 1:
                vals = d.astype(complex)
            else:
                vals = scipy.linalg.eigvalsh_tridiagonal(d, e).astype(complex)
        elif scheme.up_band == 1:
            vals = _polish_roots(op, _balanced_eigvals(block))
        else:
            vals = scipy.linalg.eigvals(block)
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise NumericalFailure(
            f"eigenvalue solver failed on {scheme.name!r} block of size {op.N}: {exc}"
        ) from exc
    return SpectralMeasure(points=vals)


def zero_moments(measure: SpectralMeasure, ell_max: int):
    """Moments of the zero distribution up to order ell_max.

    Returns
    -------
    (MomentSequence, list of float)
        Real-part moments m_ell = mean Re(z^ell), and the imaginary
        residuals |mean Im(z^ell)| for each ell.
    """
    if ell_max < 0:
        raise ValueError("need ell_max >= 0")
    n = len(measure)
    powers = np.ones(n, dtype=complex)
    moments = [1.0]
    residuals = [0.0]
    for _ in range(ell_max):
        powers = powers * measure.points
        moments.append(math.fsum(powers.real.tolist()) / n)
        residuals.append(abs(math.fsum(powers.imag.tolist())) / n)
    return MomentSequence(tuple(moments)), residuals


def reality_check(measure: SpectralMeasure, tol: float = 1e-8):
    """Whether all eigenvalues are real to within ``tol``.

    Returns (flag, largest absolute imaginary part).
    """
    worst = float(np.max(np.abs(measure.points.imag))) if len(measure) else 0.0
    return worst <= tol, worst


def charpoly_eval(op: BandedOperator, z) -> complex:
    """det(z - pi_N T pi_N) by the banded Hessenberg recurrence.

    Runs in O(N * down_band) with power-of-two rescaling of the
    determinant iterates.  If the final value exceeds the double range
    the ``CharpolyOverflow`` error carries the scaled log-determinant
    (log-magnitude and phase).
    """
    scheme = op.scheme
    if scheme.up_band != 1:
        raise SchemeError("determinant recurrence needs a single superdiagonal band")
    N = op.N
    T = op.matrix
    R = scheme.down_band
    z = complex(z)

    # Leading principal minors of (z I - T).  Expanding along the last
    # row, the (-1)^(j-i) cofactor sign cancels against the negated
    # subdiagonal entries of (z I - T), leaving
    #   d_j = (z - T[j,j]) d_{j-1}
    #         - sum_i T[i,j] (prod_{t=i}^{j-1} T[t+1,t]) d_{i-1}
    # with i ranging over the upper band j-R <= i <= j-1.  Only the last
    # R+2 minors are retained, rescaled by powers of two as they grow.
    win = [complex(1.0)]  # d_{-1}
    exponent = 0
    for j in range(N):
        val = (z - T[j, j]) * win[-1]
        sub_prod = 1.0
        for back in range(1, R + 1):
            i = j - back
            if i < 0:
                break
            sub_prod *= T[i + 1, i]
            if T[i, j] != 0.0:
                val -= T[i, j] * sub_prod * win[len(win) - 1 - back]
        win.append(val)
        if len(win) > R + 2:
            win.pop(0)
        scale = max(abs(d) for d in win)
        if scale > 2.0**512:
            win = [d * 2.0**-512 for d in win]
            exponent += 512
        elif 0.0 < scale < 2.0**-512:
            win = [d * 2.0**512 for d in win]
            exponent -= 512
    result = win[-1]
    if result == 0.0:
        return complex(0.0)
    log_abs = math.log(abs(result)) + exponent * math.log(2.0)
    if log_abs > 709.0:  # exceeds double range after unscaling
        raise CharpolyOverflow(log_abs, cmath.phase(result))
    return result * 2.0**exponent
