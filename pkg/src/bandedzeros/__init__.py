"""Trace statistics, zero distributions, and limit laws of banded
recurrence operators, with free-convolution and Monte-Carlo cross-checks."""

__version__ = "0.1.0"

from .errors import (
    CharpolyOverflow,
    ConfigError,
    ContinuationError,
    NumericalFailure,
    OracleScaleError,
    SchemeError,
)
from .measures import (
    ArcsineLaw,
    ArcsineMixture,
    AtomicMeasure,
    KVAMixture,
    MarchenkoPasturLaw,
    MomentSequence,
    SemicircleLaw,
    arcsine_moment,
    density_eval,
    kva_moment,
    mixture_moment,
    moment_sequence,
    mp_moment,
    semicircle_moment,
)
from .recurrence import (
    CLASSICAL_ENSEMBLES,
    RecurrenceScheme,
    classical_scheme,
    coeff,
    coefficient_limits,
    kva_functions,
    scheme_from_config,
)
from .bandop import (
    BandedOperator,
    build_truncation,
    gap_bound,
    mean_moment,
    variance_bound,
    variance_moment,
    window_max,
    zero_moment_trace,
)
from .paths import Constraint, LatticePathQuery, kernel_name, lattice_sum
from .zeros import (
    SpectralMeasure,
    charpoly_eval,
    reality_check,
    spectrum,
    zero_moments,
)
from .mop import (
    MultiIndexPath,
    NNCoefficients,
    banded_entries,
    hermite_coeff_fn,
    laguerre_coeff_fn,
    mop_scheme,
    mop_scheme_from_config,
    nn_coeffs_hermite,
    nn_coeffs_laguerre,
    path_from_ratios,
)
from .freeprob import (
    AlgebraicCurve,
    FormalSeries,
    curve_hermite,
    curve_laguerre,
    curve_moments,
    free_add,
    free_mul,
    k_transform_series,
    moments_from_r,
    r_transform_series,
    s_transform_series,
    series_compose_inverse,
    solve_G,
    stieltjes_density,
)
from .sampler import (
    EmpiricalBatch,
    MatrixModelSpec,
    empirical_batch,
    mc_moments,
    realize_diagonal,
    sample_spectrum,
)
