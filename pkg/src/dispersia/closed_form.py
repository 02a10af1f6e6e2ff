"""Closed-form solutions for omega = c k and omega = D k^2.

Every function broadcasts over ``x`` and ``t`` and returns a float when
both are scalars.  OFF->ON solutions vanish for ``t < 0``; ON->OFF
solutions equal the steady wave ``A sin(Omega t - K x)`` there.
"""

from __future__ import annotations

import math

import numpy as np

from .dispersion import (
    DispersionRelation,
    KleinGordon,
    Nondispersive,
    Pattern,
    Quadratic,
    SourceSignal,
)
from .errors import ConfigurationError
from .special_functions import fresnel

__all__ = [
    "u_nondispersive",
    "u_nondispersive_off",
    "u_quadratic",
    "u_quadratic_off",
    "u_burst",
    "front_oscillation",
    "front_amplitude_asymptotic",
    "envelope_on",
    "envelope_off",
    "phase_shift",
    "envelope_front_slope",
    "EVALUATORS",
    "default_evaluator",
]

EVALUATORS = ("exact-ck", "exact-Dk2", "approx", "pv")


def _grid(x, t):
    x, t = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(t, dtype=float))
    return x, t


def _out(x, t, value):
    if np.ndim(x) == 0 and np.ndim(t) == 0:
        return float(value)
    return value


def u_nondispersive(src: SourceSignal, c: float, x, t):
    """OFF->ON solution for omega = c k: a sine wave cut off sharply at x = c t."""
    x, t = _grid(x, t)
    A, W = src.amplitude, src.omega
    K = W / c
    sgn = np.sign(c * t - x)
    u = 0.5 * A * (1.0 + sgn) * np.sin(W * t - K * x)
    return _out(x, t, np.where(t < 0, 0.0, u))


def u_nondispersive_off(src: SourceSignal, c: float, x, t):
    """ON->OFF solution for omega = c k: the wave survives only for x >= c t."""
    x, t = _grid(x, t)
    A, W = src.amplitude, src.omega
    K = W / c
    wave = A * np.sin(W * t - K * x)
    sgn = np.sign(c * t - x)
    u = 0.5 * A * (1.0 - sgn) * np.sin(W * t - K * x)
    return _out(x, t, np.where(t < 0, wave, u))


def _quadratic_terms(src, D, x, t):
    """Fresnel pieces shared by the D k^2 OFF->ON and ON->OFF solutions.

    Returns ``(on, steady)`` where ``on`` is the OFF->ON field for t > 0
    and ``steady`` is A sin(Omega t - K x).  Entries with t <= 0 are
    filled with zeros.
    """
    A, W = src.amplitude, src.omega
    K = math.sqrt(W / D)
    pos = t > 0
    ts = np.where(pos, t, 1.0)
    root = np.sqrt(2.0 * np.pi * D * ts)
    v_g = 2.0 * D * K
    minus = (v_g * ts - x) / root
    plus = (v_g * ts + x) / root
    c_m, s_m = fresnel(minus)
    c_p, s_p = fresnel(plus)
    c_0, s_0 = fresnel(x / root)
    ph_m = W * ts - K * x
    ph_p = W * ts + K * x
    u = (
        0.5 * A * (1.0 + c_m + s_m) * np.sin(ph_m)
        + 0.5 * A * (c_m - s_m) * np.cos(ph_m)
        + 0.5 * A * (1.0 - c_p - s_p) * np.sin(ph_p)
        - 0.5 * A * (c_p - s_p) * np.cos(ph_p)
        + A * (c_0 - s_0)
    )
    u = np.where(pos, u, 0.0)
    steady = A * np.sin(W * t - K * x)
    return u, steady


def u_quadratic(src: SourceSignal, D: float, x, t):
    """OFF->ON exact solution for omega = D k^2 (five Fresnel terms).

    At ``t = 0`` the Fresnel arguments are singular; the field is defined
    as 0 there, matching the quiescent initial state.
    """
    x, t = _grid(x, t)
    u, _ = _quadratic_terms(src, D, x, t)
    return _out(x, t, u)


def u_quadratic_off(src: SourceSignal, D: float, x, t):
    """ON->OFF exact solution for omega = D k^2.

    Written as the steady wave minus the OFF->ON solution; for t < 0 it is
    the steady wave itself.
    """
    x, t = _grid(x, t)
    on, steady = _quadratic_terms(src, D, x, t)
    return _out(x, t, steady - on)


def front_oscillation(src: SourceSignal, D: float, t):
    """u(v_g t, t): the field seen by an observer riding at the group velocity."""
    t = np.asarray(t, dtype=float)
    A, W = src.amplitude, src.omega
    z = np.sqrt(2.0 * W * np.where(t > 0, t, 1.0) / np.pi)
    c1, s1 = fresnel(z)
    c2, s2 = fresnel(2.0 * z)
    u = (
        -0.5 * A * np.sin(W * t)
        + A * (c1 - s1)
        + 0.5 * A * (1.0 - c2 - s2) * np.sin(3.0 * W * t)
        - 0.5 * A * (c2 - s2) * np.cos(3.0 * W * t)
    )
    u = np.where(t > 0, u, 0.0)
    return float(u) if np.ndim(t) == 0 else u


def front_amplitude_asymptotic(src: SourceSignal, t):
    """Large-t amplitude of :func:`front_oscillation`, slightly below A/2."""
    t = np.asarray(t, dtype=float)
    eps = 3.0 / (2.0 * np.sqrt(2.0 * np.pi * src.omega * t))
    amp = 0.5 * src.amplitude * np.sqrt((1.0 - eps) ** 2 + eps**2)
    return float(amp) if np.ndim(t) == 0 else amp


def _front_argument(src, D, x, t):
    K = math.sqrt(src.omega / D)
    return (2.0 * D * K * t - x) / np.sqrt(2.0 * np.pi * D * t)


def envelope_on(src: SourceSignal, D: float, x, t):
    """Approximate envelope of the OFF->ON D k^2 solution near the front."""
    x, t = _grid(x, t)
    c, s = fresnel(_front_argument(src, D, x, t))
    env = src.amplitude / math.sqrt(2.0) * np.hypot(c + 0.5, s + 0.5)
    return _out(x, t, env)


def envelope_off(src: SourceSignal, D: float, x, t):
    """Approximate envelope of the ON->OFF D k^2 solution near the front."""
    x, t = _grid(x, t)
    c, s = fresnel(_front_argument(src, D, x, t))
    env = src.amplitude / math.sqrt(2.0) * np.hypot(c - 0.5, s - 0.5)
    return _out(x, t, env)


def phase_shift(src: SourceSignal, D: float, x, t):
    """Phase phi such that envelope_on * sin(Omega t - K x + phi) is the
    two-term front approximation.  Uses atan2, so the branch follows the
    sign of ``1 + C + S``.
    """
    x, t = _grid(x, t)
    c, s = fresnel(_front_argument(src, D, x, t))
    return _out(x, t, np.arctan2(c - s, 1.0 + c + s))


def envelope_front_slope(src: SourceSignal, D: float, t):
    """d(envelope_on)/dx at x = v_g t.

    Differentiating the envelope at zero Fresnel argument gives
    ``-A / (2 sqrt(2 pi D t))``; the steepness falls off as t^(-1/2).
    """
    t = np.asarray(t, dtype=float)
    slope = -src.amplitude / (2.0 * np.sqrt(2.0 * np.pi * D * t))
    return float(slope) if np.ndim(t) == 0 else slope


def _infinite_train(src, rel, evaluator, cfg):
    on = SourceSignal(src.amplitude, src.omega, Pattern.OFF_TO_ON)
    if evaluator == "exact-ck":
        if not isinstance(rel, Nondispersive):
            raise ConfigurationError("exact-ck needs a Nondispersive relation")
        return lambda x, t: u_nondispersive(on, rel.c, x, t)
    if evaluator == "exact-Dk2":
        if not isinstance(rel, Quadratic):
            raise ConfigurationError("exact-Dk2 needs a Quadratic relation")
        return lambda x, t: u_quadratic(on, rel.D, x, t)
    if evaluator == "approx":
        from .approx_general import u_approx
        return lambda x, t: u_approx(on, rel, x, t)
    if evaluator == "pv":
        from .pv_quadrature import u_integral
        return lambda x, t: u_integral(on, rel, x, t, cfg)
    raise ConfigurationError(
        f"unknown evaluator {evaluator!r}; choose one of {EVALUATORS}"
    )


def default_evaluator(rel: DispersionRelation) -> str:
    """Most accurate evaluator available for a relation."""
    if isinstance(rel, Nondispersive):
        return "exact-ck"
    if isinstance(rel, Quadratic):
        return "exact-Dk2"
    if isinstance(rel, KleinGordon):
        return "approx"
    return "pv"


def u_burst(src: SourceSignal, rel: DispersionRelation, x, t,
            evaluator: str | None = None, cfg=None):
    """Field of an n-cycle burst, u_inf(x, t) - u_inf(x, t - n T).

    Parameters
    ----------
    src : SourceSignal
        Must have ``pattern=Pattern.BURST`` and ``n >= 1``.
    rel : DispersionRelation
    x, t : array_like
    evaluator : {"exact-ck", "exact-Dk2", "approx", "pv"}, optional
        How u_inf is computed; defaults to the exact form when one exists.
    cfg : PVQuadratureConfig, optional
        Passed through to the ``"pv"`` evaluator.
    """
    if src.pattern is not Pattern.BURST:
        raise ConfigurationError("u_burst needs a SourceSignal with pattern BURST")
    evaluator = evaluator or default_evaluator(rel)
    u_inf = _infinite_train(src, rel, evaluator, cfg)
    x, t = _grid(x, t)
    delay = src.n * src.period
    u = np.asarray(u_inf(x, t)) - np.asarray(u_inf(x, t - delay))
    return _out(x, t, u)
