"""Monte-Carlo matrix models and empirical-moment statistics.

Four models are sampled:

- ``gue``: Hermitian with diagonal entries Normal(0, 1/N) and
  independent off-diagonal real/imaginary parts Normal(0, 1/(2N));
- ``wishart``: (1/N) G G* with G of shape N x (N + N alpha) filled
  with standard complex Gaussians (N alpha must be an integer);
- ``gue_source``: a gue sample plus a fixed diagonal whose entries
  repeat each location a_d with the path multiplicity n_d;
- ``wishart_cov``: A^(1/2) W A^(1/2) for a wishart sample W and the
  same diagonal A (entrywise square root, so all a_d must be > 0).

Reproducibility contract: sample j draws from Philox keyed by
``seed XOR j``.  Gaussians come from inverse-CDF transform of the
64-bit uniform stream (no rejection), so the draw count per sample is
a fixed function of the model shape, and identical (spec, L, samples,
seed) inputs give bit-identical results.  Accumulation across samples
uses numpy pairwise summation over a fixed-shape array, which is
likewise deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.special

from .errors import ConfigError
from .measures import MomentSequence
from .mop import MultiIndexPath
from .zeros import SpectralMeasure

__all__ = [
    "MatrixModelSpec",
    "EmpiricalBatch",
    "realize_diagonal",
    "sample_spectrum",
    "empirical_batch",
    "mc_moments",
]

_KINDS = ("gue", "wishart", "gue_source", "wishart_cov")


def realize_diagonal(q, a, N: int) -> np.ndarray:
    """Length-N diagonal with each a_d repeated n_d^(N) times.

    Multiplicities follow the same greedy multi-index path the
    deterministic side uses, so sampled and operator-side ensembles
    describe the same source at every N.  Entries are grouped by
    component, in input order.
    """
    path = MultiIndexPath(tuple(q))
    counts = path.index(N)
    out = np.concatenate([np.full(n_d, float(a_d)) for n_d, a_d in zip(counts, a)])
    return out


@dataclass(frozen=True)
class MatrixModelSpec:
    """What to sample: model kind, size, and model parameters."""

    kind: str
    N: int
    alpha: float = 0.0
    source: np.ndarray = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ConfigError(f"unknown model kind {self.kind!r}; expected {_KINDS}")
        if self.N < 1:
            raise ConfigError(f"need N >= 1, got {self.N}")
        if self.kind in ("wishart", "wishart_cov"):
            if self.alpha < 0:
                raise ConfigError(f"need alpha >= 0, got {self.alpha}")
            m = self.N * self.alpha
            if abs(m - round(m)) > 1e-9:
                raise ConfigError(
                    f"N*alpha must be an integer to sample (N={self.N}, "
                    f"alpha={self.alpha} gives {m})"
                )
        if self.kind in ("gue_source", "wishart_cov"):
            if self.source is None:
                raise ConfigError(f"{self.kind} needs a source diagonal")
            src = np.asarray(self.source, dtype=float)
            if src.shape != (self.N,):
                raise ConfigError(
                    f"source diagonal must have length N={self.N}, got {src.shape}"
                )
            if self.kind == "wishart_cov" and np.any(src <= 0):
                raise ConfigError("wishart_cov needs a positive source diagonal")
            object.__setattr__(self, "source", src)

    @property
    def columns(self) -> int:
        """Second dimension of the Gaussian factor for wishart kinds."""
        return self.N + int(round(self.N * self.alpha))


def _gaussians(rng: np.random.Generator, count: int) -> np.ndarray:
    """Standard normals by inverse CDF of the uniform stream.

    random() consumes exactly one 64-bit word per value, making the
    draw count a fixed function of ``count``.  The half-ulp offset
    centres each uniform in its lattice cell, keeping the transform
    away from ndtri's poles at 0 and 1.
    """
    u = rng.random(count) + 2.0**-54
    return scipy.special.ndtri(u)


def _sample_matrix(spec: MatrixModelSpec, seed: int) -> np.ndarray:
    rng = np.random.Generator(np.random.Philox(key=seed))
    N = spec.N
    if spec.kind in ("gue", "gue_source"):
        g = _gaussians(rng, N * N)
        diag = g[:N] / math.sqrt(N)
        off = (g[N::2] + 1j * g[N + 1 :: 2]) / math.sqrt(2.0 * N)
        H = np.zeros((N, N), dtype=complex)
        iu = np.triu_indices(N, k=1)
        H[iu] = off
        H += H.conj().T
        H[np.diag_indices(N)] = diag
        if spec.kind == "gue_source":
            H[np.diag_indices(N)] += spec.source
        return H
    M = spec.columns
    g = _gaussians(rng, 2 * N * M)
    G = (g[0::2] + 1j * g[1::2]).reshape(N, M) / math.sqrt(2.0)
    W = (G @ G.conj().T) / N
    if spec.kind == "wishart_cov":
        root = np.sqrt(spec.source)
        W = root[:, None] * W * root[None, :]
    return W


def sample_spectrum(spec: MatrixModelSpec, seed: int) -> SpectralMeasure:
    """Eigenvalues of one sampled matrix (sorted ascending)."""
    H = _sample_matrix(spec, int(seed))
    vals = np.linalg.eigvalsh(H)
    return SpectralMeasure(points=vals.astype(complex))


@dataclass(frozen=True)
class EmpiricalBatch:
    """Per-sample empirical moments: row j holds (1/N) sum_i x_i^ell
    for ell = 0..L of the sample drawn with seed ``seed XOR j``."""

    seed: int
    samples: int
    table: np.ndarray

    @property
    def L(self) -> int:
        return self.table.shape[1] - 1


def empirical_batch(spec: MatrixModelSpec, L: int, samples: int, seed: int) -> EmpiricalBatch:
    """Draw ``samples`` independent spectra and tabulate their moments."""
    if L < 0:
        raise ConfigError("need L >= 0")
    if samples < 1:
        raise ConfigError("need at least 1 sample")
    seed = int(seed)
    table = np.empty((samples, L + 1))
    for j in range(samples):
        H = _sample_matrix(spec, seed ^ j)
        vals = np.linalg.eigvalsh(H)
        powers = np.ones_like(vals)
        for ell in range(L + 1):
            table[j, ell] = powers.mean()
            powers = powers * vals
    table.setflags(write=False)
    return EmpiricalBatch(seed=seed, samples=samples, table=table)


def mc_moments(spec: MatrixModelSpec, L: int, samples: int, seed: int):
    """Empirical-moment statistics over independent samples.

    Sample j uses the derived seed ``seed XOR j``.  Returns
    (mean: MomentSequence, variance per ell, standard error per ell),
    with variance the unbiased per-ell sample variance of
    (1/N) sum_i x_i^ell and the standard error of its mean.
    """
    if samples < 2:
        raise ConfigError("need at least 2 samples")
    batch = empirical_batch(spec, L, samples, seed)
    mean = batch.table.mean(axis=0)
    var = batch.table.var(axis=0, ddof=1)
    se = np.sqrt(var / samples)
    return MomentSequence(tuple(mean)), var.tolist(), se.tolist()
