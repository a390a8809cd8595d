"""Limit-law moments and densities against quadrature."""

import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from bandedzeros.measures import (
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


def quad_moment(law, ell, lo, hi):
    val, err = integrate.quad(
        lambda x: x**ell * law.density(x), lo, hi, limit=400, points=[lo, hi]
    )
    for x, w in law.atoms():
        val += w * x**ell
    return val


def test_arcsine_point_mass():
    assert arcsine_moment(3, 3, 5) == 243


def test_arcsine_symmetric_values():
    assert arcsine_moment(-2, 2, 1) == 0
    assert arcsine_moment(-2, 2, 2) == 2


def test_arcsine_against_quadrature():
    law = ArcsineLaw(-1.0, 2.5)
    for ell in range(13):
        ref = quad_moment(law, ell, -1.0, 2.5)
        assert math.isclose(float(law.moment(ell)), ref, rel_tol=1e-8, abs_tol=1e-10)


def test_arcsine_relabel_invariance():
    # construction sorts the endpoints, so either order is the same law
    assert ArcsineLaw(2.0, -1.0).moment(3) == ArcsineLaw(-1.0, 2.0).moment(3)


def test_arcsine_odd_moments_vanish_when_symmetric():
    law = ArcsineLaw(-1.7, 1.7)
    for ell in (1, 3, 5, 7):
        assert abs(float(law.moment(ell))) < 1e-14


def test_semicircle_moments_are_catalan():
    assert semicircle_moment(0) == 1
    assert semicircle_moment(2) == 1
    assert semicircle_moment(4) == 2
    assert semicircle_moment(6) == 5
    assert semicircle_moment(3) == 0


def test_semicircle_against_quadrature():
    law = SemicircleLaw()
    for ell in range(13):
        ref = quad_moment(law, ell, -2.0, 2.0)
        assert math.isclose(float(law.moment(ell)), ref, rel_tol=1e-8, abs_tol=1e-10)


def test_mp_moments():
    assert mp_moment(1, 2) == 2
    assert mp_moment(1, 3) == 5
    assert mp_moment(0, 3) == 0


def test_mp_first_moment_is_rate():
    for alpha in (0.25, 1, 2, 3.5):
        assert float(mp_moment(alpha, 1)) == pytest.approx(alpha, rel=1e-14)


def test_mp_against_quadrature():
    for alpha in (0.5, 1.0, 2.0):
        law = MarchenkoPasturLaw(alpha)
        lo = (1 - math.sqrt(alpha)) ** 2
        hi = (1 + math.sqrt(alpha)) ** 2
        for ell in range(13):
            ref = quad_moment(law, ell, lo, hi)
            assert math.isclose(
                float(law.moment(ell)), ref, rel_tol=1e-8, abs_tol=1e-10
            )


def test_mp_atom_mass():
    assert MarchenkoPasturLaw(0.25).atoms() == [(0.0, 0.75)]
    assert MarchenkoPasturLaw(2.0).atoms() == []


def test_kva_semicircle_profile():
    mix = ArcsineMixture(lambda s: math.sqrt(s), lambda s: 0.0)
    assert kva_moment(mix, 2) == pytest.approx(1.0, abs=1e-10)
    assert kva_moment(mix, 4) == pytest.approx(2.0, abs=1e-10)


def test_kva_constant_profile_is_single_arcsine():
    a, b = 0.7, -0.3
    mix = ArcsineMixture(lambda s: a, lambda s: b)
    law = ArcsineLaw(b - 2 * a, b + 2 * a)
    for ell in range(7):
        # Gauss-Legendre of a constant integrand is exact
        assert kva_moment(mix, ell) == pytest.approx(float(law.moment(ell)), abs=1e-13)


def test_kva_point_profile():
    mix = ArcsineMixture(lambda s: 0.0, lambda s: 1.5)
    assert kva_moment(mix, 1) == pytest.approx(1.5, abs=1e-13)


def test_kva_alias_names():
    assert KVAMixture is ArcsineMixture
    mix = ArcsineMixture(lambda s: math.sqrt(s), lambda s: 0.0)
    assert kva_moment(mix, 3) == mixture_moment(mix, 3)


def test_mixture_rejects_bad_order():
    with pytest.raises(ValueError):
        ArcsineMixture(lambda s: 1.0, lambda s: 0.0, order=0)


def test_density_eval_values():
    assert density_eval(SemicircleLaw(), 0.0) == pytest.approx(1 / math.pi, rel=1e-14)
    assert density_eval(ArcsineLaw(-2, 2), 0.0) == pytest.approx(
        1 / (2 * math.pi), rel=1e-14
    )
    assert density_eval(MarchenkoPasturLaw(1.0), 4.5) == 0.0


def test_density_eval_never_smooths_atoms():
    law = MarchenkoPasturLaw(0.25)
    assert density_eval(law, 0.0, epsilon=1e-3) == 0.0
    with pytest.raises(ValueError):
        density_eval(law, 0.0, epsilon=0.0)


def test_atomic_measure_moments_exact():
    nu = AtomicMeasure([(Fraction(1), Fraction(1, 2)), (Fraction(-1), Fraction(1, 2))])
    assert nu.moment(1) == 0
    assert nu.moment(2) == 1
    assert nu.moment(7) == 0


def test_atomic_measure_validation():
    with pytest.raises(ValueError):
        AtomicMeasure([])
    with pytest.raises(ValueError):
        AtomicMeasure([(1.0, 0.5), (1.0, 0.5)])
    with pytest.raises(ValueError):
        AtomicMeasure([(0.0, 0.4), (1.0, 0.4)])


def test_moment_sequence_contract():
    seq = MomentSequence((1, 0.5, 0.75))
    assert seq.order == 2
    assert seq[1] == 0.5
    assert len(seq) == 3
    with pytest.raises(ValueError):
        MomentSequence((2.0, 0.0))
    with pytest.raises(ValueError):
        MomentSequence(())
    with pytest.raises(ValueError):
        MomentSequence((1.0, float("inf")))


def test_moment_sequence_builder():
    seq = moment_sequence(SemicircleLaw(), 6)
    assert seq.floats() == [1, 0, 1, 0, 2, 0, 5]


def test_arcsine_degenerate_interval():
    law = ArcsineLaw(1.25, 1.25)
    assert law.moment(2) == pytest.approx(1.25**2)
    assert law.atoms() == [(1.25, 1.0)]


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
def test_mixture_density_integrates_to_one():
    mix = ArcsineMixture(lambda s: math.sqrt(s), lambda s: 0.0, order=120)
    val, _ = integrate.quad(mix.density, -2.0, 2.0, limit=300)
    assert val == pytest.approx(1.0, abs=5e-3)
