"""Truncations, trace statistics, and the explicit bounds."""

import math

import numpy as np
import pytest

from bandedzeros.bandop import (
    build_truncation,
    gap_bound,
    mean_moment,
    trace_table,
    variance_bound,
    variance_moment,
    window_max,
    zero_moment_trace,
)
from bandedzeros.mop import mop_scheme
from bandedzeros.recurrence import classical_scheme

GUE = classical_scheme("gue")


def test_build_gue_truncation():
    op = build_truncation(GUE, 3, 2)
    assert op.dim == 5
    full = op.matrix
    expected = [math.sqrt(k / 3.0) for k in (1, 2, 3, 4)]
    assert np.allclose(np.diag(full, 1), expected)
    assert np.allclose(np.diag(full, -1), expected)
    assert np.allclose(np.diag(full), 0.0)


def test_build_one_by_one():
    s = classical_scheme("wishart", alpha=0.0)
    op = build_truncation(s, 1, 0)
    assert op.block().shape == (1, 1)
    assert op.block()[0, 0] == pytest.approx(1.0)


def test_build_charlier_example():
    s = classical_scheme("charlier", alpha=1.0)
    op = build_truncation(s, 2, 1)
    block = op.block()
    assert block[0, 0] == pytest.approx(1.0)
    assert block[1, 1] == pytest.approx(1.5)
    assert block[0, 1] == pytest.approx(math.sqrt(0.5))


def test_mean_moment_values():
    assert mean_moment(GUE, 5, 2) == pytest.approx(1.0, rel=1e-14)
    assert mean_moment(GUE, 9, 0) == 1.0
    w0 = classical_scheme("wishart", alpha=0.0)
    assert mean_moment(w0, 4, 1) == pytest.approx(1.0, rel=1e-14)


def test_gue_mean_second_moment_all_n():
    for n in (2, 17, 101):
        assert mean_moment(GUE, n, 2) == pytest.approx(1.0, abs=1e-13)


def test_zero_moment_values():
    assert zero_moment_trace(GUE, 5, 2) == pytest.approx(0.8, rel=1e-14)
    assert zero_moment_trace(GUE, 5, 0) == 1.0
    assert zero_moment_trace(GUE, 5, 1) == 0.0


def test_variance_values():
    for n in (3, 20, 77):
        assert variance_moment(GUE, n, 1) == pytest.approx(1.0 / n**2, rel=1e-14)
    assert variance_moment(GUE, 12, 0) == 0.0


def test_gue_variance_identity_is_exact():
    # N^2 * Var(moment 1) = a_N^2 * N^2 / N^2 with a_N^2 = N/N: no rounding
    for n in (2, 10, 250, 500):
        assert variance_moment(GUE, n, 1) * n**2 == 1.0


def test_variance_nonnegative():
    schemes = [
        GUE,
        classical_scheme("wishart", alpha=1.0),
        classical_scheme("charlier", alpha=1.0),
        classical_scheme("meixner", alpha=0.5, beta=1.0),
    ]
    for scheme in schemes:
        for n in (3, 9, 33):
            for ell in range(5):
                assert variance_moment(scheme, n, ell) >= 0.0


def test_gap_bound_gue_example():
    # (2*2)^2/100 * (window max)^2 with window max = sqrt(1.02)
    bound = gap_bound(GUE, 100, 2)
    assert bound == pytest.approx(0.16 * 1.02, rel=1e-12)
    gap = abs(mean_moment(GUE, 100, 2) - zero_moment_trace(GUE, 100, 2))
    assert gap == pytest.approx(0.01, rel=1e-10)
    assert gap <= bound


def test_gap_bound_dominates_single_escape():
    # at ell = 1 the only escaping weight is a_N^2 / N
    for scheme in (GUE, classical_scheme("charlier", alpha=1.0)):
        n = 64
        a_n = scheme.entry(n - 1, n, n)
        assert gap_bound(scheme, n, 1) >= a_n**2 / n - 1e-15


def test_variance_bound_dominates():
    w1 = classical_scheme("wishart", alpha=1.0)
    assert variance_bound(w1, 50, 2) >= variance_moment(w1, 50, 2)
    for n in (10, 40):
        assert variance_bound(GUE, n, 1) >= variance_moment(GUE, n, 1)


def test_window_max_examples():
    assert window_max(GUE, 100, 0.1) == pytest.approx(math.sqrt(1.1), rel=1e-12)
    charlier = classical_scheme("charlier", alpha=1.0)
    assert window_max(charlier, 100, 0.1) == pytest.approx(2.1, rel=1e-12)


def test_window_max_requires_positive_eps():
    with pytest.raises(ValueError):
        window_max(GUE, 10, 0.0)


def test_bounds_require_positive_ell():
    with pytest.raises(ValueError):
        gap_bound(GUE, 10, 0)
    with pytest.raises(ValueError):
        variance_bound(GUE, 10, 0)


def test_trace_table_shape_and_consistency():
    rows = trace_table(GUE, 6, 3)
    assert len(rows) == 3
    for row in rows:
        n, ell, mean, zero, gap, gbound, var, vbound = row
        assert n == 6
        assert gap == pytest.approx(abs(mean - zero), abs=1e-15)
        assert gap <= gbound + 1e-15
        assert var <= vbound + 1e-15


def test_mop_window_max_stays_bounded():
    scheme = mop_scheme("multiple-hermite", a=(1.0, -1.0), q=(0.5, 0.5))
    values = [window_max(scheme, n, 0.1) for n in (50, 100, 200, 400)]
    assert max(values) <= values[0] * 1.5 + 1.0


def test_mop_laguerre_window_max_stays_bounded():
    scheme = mop_scheme(
        "multiple-laguerre", a=(1.0, 2.0), q=(0.5, 0.5), alpha=1.0
    )
    values = [window_max(scheme, n, 0.1) for n in (50, 100, 200, 400)]
    assert max(values) <= values[0] * 1.5 + 1.0


def test_gue_moments_match_catalan_in_the_bulk():
    # at large N the mean moments approach the semicircle values
    for ell, target in ((2, 1.0), (4, 2.0), (6, 5.0)):
        assert mean_moment(GUE, 4000, ell) == pytest.approx(target, abs=2e-2)
