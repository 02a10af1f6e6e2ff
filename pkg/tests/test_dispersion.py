import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dispersia.dispersion import (
    Custom,
    KleinGordon,
    Nondispersive,
    Pattern,
    Quadratic,
    SourceSignal,
    characteristic_scales,
    check_even,
    curvature,
    group_velocity,
    make_relation,
    omega,
    phase_velocity,
    wavenumber_for,
)
from dispersia.errors import (
    AmbiguousWavenumberError,
    ConfigurationError,
    DomainError,
    NoRealWavenumberError,
    ParityViolationError,
)

BUILT_INS = [Nondispersive(1.7), Quadratic(0.6), KleinGordon(1.3, 0.8)]


def test_omega_examples():
    assert omega(Quadratic(1.0), 2.0) == 4.0
    assert omega(KleinGordon(1.0, 1.0), 0.0) == 1.0
    assert omega(Nondispersive(3.0), 2.0) == 6.0


def test_velocity_and_curvature_examples():
    q = Quadratic(0.7)
    assert group_velocity(q, 3.0) == pytest.approx(2 * 0.7 * 3.0)
    assert phase_velocity(q, 3.0) == pytest.approx(0.7 * 3.0)
    assert curvature(q, 3.0) == pytest.approx(0.7)
    nd = Nondispersive(2.5)
    assert group_velocity(nd, 1.1) == phase_velocity(nd, 1.1) == 2.5
    assert curvature(nd, 1.1) == 0.0
    kg = KleinGordon(1.0, 1.0)
    K = wavenumber_for(kg, 5.0)
    assert group_velocity(kg, K) == pytest.approx(K / 5.0, rel=1e-14)
    assert curvature(kg, K) == pytest.approx(1.0 / (2 * 125.0), rel=1e-14)


def test_phase_velocity_rejects_zero():
    with pytest.raises(DomainError):
        phase_velocity(Quadratic(1.0), 0.0)


def test_wavenumber_examples():
    assert wavenumber_for(Quadratic(1.0), 4.0) == 2.0
    assert wavenumber_for(KleinGordon(1.0, 1.0), 5.0) == pytest.approx(math.sqrt(24.0), rel=1e-15)
    with pytest.raises(NoRealWavenumberError):
        wavenumber_for(KleinGordon(1.0, 1.0), 0.5)


def test_kg_wavenumber_matches_bisection():
    kg = KleinGordon(1.0, 1.0)
    lo, hi = 0.0, 10.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        lo, hi = (mid, hi) if math.hypot(mid, 1.0) < 5.0 else (lo, mid)
    assert wavenumber_for(kg, 5.0) == pytest.approx(lo, rel=1e-14)


@pytest.mark.parametrize("rel", BUILT_INS, ids=lambda r: r.name)
def test_analytic_derivatives_match_finite_differences(rel):
    rng = np.random.default_rng(11)
    k = rng.uniform(1e-3, 10.0, 100)
    h = 1e-5 * np.maximum(k, 1.0)
    d1 = (rel.omega(k + h) - rel.omega(k - h)) / (2 * h)
    d2 = (rel.d_omega(k + h) - rel.d_omega(k - h)) / (2 * h)
    assert np.allclose(group_velocity(rel, k), d1, rtol=1e-6, atol=0)
    scale = np.maximum(np.abs(d2), 1e-12)
    assert np.all(np.abs(2 * curvature(rel, k) - d2) <= 1e-6 * scale + 1e-9)


@pytest.mark.parametrize("rel", BUILT_INS, ids=lambda r: r.name)
@given(st.floats(1.0, 100.0))
def test_wavenumber_inverts_omega(rel, Omega):
    assert omega(rel, wavenumber_for(rel, Omega)) == pytest.approx(Omega, rel=1e-10)


@pytest.mark.parametrize("rel", BUILT_INS, ids=lambda r: r.name)
def test_built_ins_are_even(rel):
    check_even(rel, (1e-3, 10.0))
    k = np.random.default_rng(3).uniform(0, 10, 100)
    assert np.all(np.abs(rel.omega(k) - rel.omega(-k)) <= 1e-12 * rel.omega(k))


def _custom(fn, d1, d2, **kw):
    return Custom(fn, d1, d2, **kw)


def test_custom_relation_wavenumber_by_root_finding():
    rel = _custom(lambda k: k * k + k**4, lambda k: 2 * k + 4 * k**3, lambda k: 2 + 12 * k * k)
    K = wavenumber_for(rel, 2.0)
    assert K == pytest.approx(1.0, rel=1e-12)


def test_custom_odd_relation_is_rejected():
    with pytest.raises(ParityViolationError):
        _custom(lambda k: k**3 + k, lambda k: 3 * k * k + 1, lambda k: 6 * k)


def test_custom_non_monotone_relation_is_ambiguous():
    rel = _custom(lambda k: 1.0 + (k * k - 1.0) ** 2,
                  lambda k: 4 * k * (k * k - 1.0), lambda k: 12 * k * k - 4,
                  check_parity=True)
    with pytest.raises(AmbiguousWavenumberError):
        wavenumber_for(rel, 5.0)


def test_custom_below_range_has_no_wavenumber():
    rel = _custom(lambda k: 2.0 + k * k, lambda k: 2 * k, lambda k: 2.0 + 0 * k)
    with pytest.raises(NoRealWavenumberError):
        wavenumber_for(rel, 1.5)


@pytest.mark.parametrize("ctor", [lambda: Nondispersive(0.0), lambda: Quadratic(-1.0),
                                  lambda: KleinGordon(1.0, 0.0)])
def test_invalid_parameters(ctor):
    with pytest.raises(ConfigurationError):
        ctor()


def test_make_relation_names():
    assert make_relation("quadratic", D=2.0) == Quadratic(2.0)
    assert make_relation("klein-gordon", c=2.0, omega0=3.0) == KleinGordon(2.0, 3.0)
    assert make_relation("nondispersive", c=4.0) == Nondispersive(4.0)
    with pytest.raises(ConfigurationError):
        make_relation("plasma")


def test_source_signal_validation_and_period():
    src = SourceSignal(2.0, 4.0, Pattern.BURST, 3)
    assert src.period == pytest.approx(math.pi / 2)
    for bad in [dict(amplitude=0.0), dict(omega=-1.0),
                dict(pattern=Pattern.BURST), dict(pattern=Pattern.BURST, n=0)]:
        with pytest.raises(ConfigurationError):
            SourceSignal(**bad)


def test_characteristic_scales():
    assert characteristic_scales(Quadratic(4.0), 1.0) == (2.0, 1.0)
    assert characteristic_scales(Nondispersive(3.0), 2.0) == (1.5, 0.5)
    assert characteristic_scales(KleinGordon(2.0, 4.0), 9.0) == (0.5, 0.25)
