import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dispersia.errors import DomainError
from dispersia.special_functions import (
    ASYMPTOTIC_ZMIN,
    SERIES_SWITCH,
    FresnelPair,
    fresnel,
    fresnel_asymptotic,
    signum,
)
from dispersia.verification import ASYMPTOTIC_BOUND

# mpmath.fresnelc / fresnels at 40 digits
MPMATH_VALUES = [
    (0.5, 0.49234422587144639288, 0.064732432859999277611),
    (1.0, 0.77989340037682282947, 0.43825914739035476608),
    (1.5, 0.44526117603982153506, 0.69750496008209301308),
    (2.5, 0.45741300964177704525, 0.61918175581959293611),
    (7.3, 0.5392680156584624041, 0.5189473278581444502),
    (123.4, 0.4983557254116288259, 0.49801249804703434241),
    (10000.3, 0.50000448489086309054, 0.49996848751357961543),
]

finite_x = st.floats(-1e4, 1e4, allow_nan=False, allow_infinity=False)


@pytest.mark.parametrize("x, c_ref, s_ref", MPMATH_VALUES)
def test_fresnel_matches_high_precision_values(x, c_ref, s_ref):
    c, s = fresnel(x)
    assert abs(c - c_ref) <= 1e-12
    assert abs(s - s_ref) <= 1e-12


def test_fresnel_at_zero_and_returns_named_pair():
    pair = fresnel(0.0)
    assert isinstance(pair, FresnelPair)
    assert pair.c_value == 0.0 and pair.s_value == 0.0


def test_fresnel_large_argument_limit():
    c, s = fresnel(1e8)
    assert abs(c - 0.5) < 1e-8 and abs(s - 0.5) < 1e-8


def test_fresnel_vectorised_matches_scalar():
    x = np.linspace(-6, 6, 37)
    c, s = fresnel(x)
    for xi, ci, si in zip(x, c, s):
        pair = fresnel(float(xi))
        assert pair.c_value == ci and pair.s_value == si


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
def test_fresnel_rejects_non_finite(bad):
    with pytest.raises(DomainError):
        fresnel(bad)


def test_series_and_continued_fraction_agree_at_seam():
    below = fresnel(np.nextafter(SERIES_SWITCH, 0))
    above = fresnel(np.nextafter(SERIES_SWITCH, 3))
    assert abs(below.c_value - above.c_value) < 1e-12
    assert abs(below.s_value - above.s_value) < 1e-12


@settings(max_examples=300)
@given(finite_x)
def test_fresnel_is_odd(x):
    c, s = fresnel(x)
    cm, sm = fresnel(-x)
    assert cm == -c and sm == -s


@settings(max_examples=300)
@given(finite_x)
def test_fresnel_bounded_below_point_nine(x):
    c, s = fresnel(x)
    assert abs(c) < 0.9 and abs(s) < 0.9


@settings(max_examples=200)
@given(st.floats(-5, 5))
def test_fresnel_derivative_matches_integrand(x):
    h = 1e-5
    dc = (fresnel(x + h).c_value - fresnel(x - h).c_value) / (2 * h)
    ds = (fresnel(x + h).s_value - fresnel(x - h).s_value) / (2 * h)
    assert abs(dc - math.cos(0.5 * math.pi * x * x)) <= 1e-8
    assert abs(ds - math.sin(0.5 * math.pi * x * x)) <= 1e-8


def test_asymptotic_formula_and_examples():
    z = 3.7
    c, s = fresnel_asymptotic(z)
    assert c == pytest.approx(0.5 + math.sin(0.5 * math.pi * z * z) / (math.pi * z), abs=1e-13)
    assert s == pytest.approx(0.5 - math.cos(0.5 * math.pi * z * z) / (math.pi * z), abs=1e-13)
    # z = 4: within the next-order envelope 1/(pi^2 4^2) * pi/2
    full, asym = fresnel(4.0), fresnel_asymptotic(4.0)
    bound = 1.0 / (math.pi**2 * 16) * math.pi / 2
    assert abs(full.c_value - asym.c_value) < bound
    assert abs(full.s_value - asym.s_value) < bound
    assert abs(fresnel(2.0).c_value - fresnel_asymptotic(2.0).c_value) < 0.06
    big = fresnel_asymptotic(1e9)
    assert big.c_value == pytest.approx(0.5, abs=1e-9)


def test_asymptotic_rejects_small_argument():
    with pytest.raises(DomainError):
        fresnel_asymptotic(0.5 * ASYMPTOTIC_ZMIN)


@settings(max_examples=300)
@given(st.floats(2.0, 50.0))
def test_asymptotic_error_within_cubic_bound(z):
    full, asym = fresnel(z), fresnel_asymptotic(z)
    err = max(abs(full.c_value - asym.c_value), abs(full.s_value - asym.s_value))
    assert err <= ASYMPTOTIC_BOUND / z**3


@pytest.mark.parametrize("x, expected", [(3.2, 1), (0.0, 0), (-1e-300, -1), (-0.0, 0)])
def test_signum_examples(x, expected):
    assert signum(x) == expected


def test_signum_vectorised():
    out = signum(np.array([-2.0, 0.0, 5.0]))
    assert out.tolist() == [-1, 0, 1]
