"""Fresnel-type approximate solution for an arbitrary even dispersion relation.

omega(k) is expanded to second order about +-K, which reduces the
integral-form solution to the same Fresnel structure as the D k^2 case
with ``v_g = omega'(K)`` and ``gamma = omega''(K)/2``.  When gamma is
exactly zero the Fresnel functions are replaced by their limits, which
reproduces the sharp-front nondispersive solution.
"""

from __future__ import annotations

import math

import numpy as np

from .dispersion import (
    Custom,
    DispersionRelation,
    SourceSignal,
    check_even,
    curvature,
    group_velocity,
    wavenumber_for,
)
from .special_functions import fresnel

__all__ = ["front_parameters", "u_approx", "u_approx_off", "approx_envelope"]


def front_parameters(src: SourceSignal, rel: DispersionRelation):
    """Return ``(K, v_g, gamma)`` at the source frequency.

    Raises ParityViolationError for odd custom relations, because the
    derivation pairs the expansions about +K and -K.
    """
    if isinstance(rel, Custom):
        check_even(rel, rel.parity_range)
    K = wavenumber_for(rel, src.omega)
    return K, float(group_velocity(rel, K)), float(curvature(rel, K))


def _fresnel_pair(arg_num, gamma, t, limit_sign):
    """C and S at arg_num / sqrt(2 pi |gamma| t), or their gamma -> 0 limits."""
    if gamma == 0.0:
        half = 0.5 * limit_sign
        return half, half
    return fresnel(arg_num / np.sqrt(2.0 * np.pi * abs(gamma) * t))


def _grid(x, t):
    return np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(t, dtype=float))


def _approx_field(src, rel, x, t):
    A, W = src.amplitude, src.omega
    K, v_g, gamma = front_parameters(src, rel)
    pos = t > 0
    ts = np.where(pos, t, 1.0)
    sg = float(np.sign(gamma))
    c_m, s_m = _fresnel_pair(v_g * ts - x, gamma, ts, np.sign(v_g * ts - x))
    c_p, s_p = _fresnel_pair(v_g * ts + x, gamma, ts, 1.0)
    ph_m = W * ts - K * x
    ph_p = W * ts + K * x
    u = (
        0.5 * A * (1.0 + c_m + s_m) * np.sin(ph_m)
        + 0.5 * A * sg * (c_m - s_m) * np.cos(ph_m)
        + 0.5 * A * (1.0 - c_p - s_p) * np.sin(ph_p)
        - 0.5 * A * sg * (c_p - s_p) * np.cos(ph_p)
    )
    return np.where(pos, u, 0.0), K


def u_approx(src: SourceSignal, rel: DispersionRelation, x, t):
    """Approximate OFF->ON field for any even dispersion relation.

    Accuracy degrades away from the front and close to the source; no
    validity gate is applied.
    """
    x, t = _grid(x, t)
    u, _ = _approx_field(src, rel, x, t)
    if u.ndim == 0:
        return float(u)
    return u


def u_approx_off(src: SourceSignal, rel: DispersionRelation, x, t):
    """Approximate ON->OFF field: the steady wave minus :func:`u_approx`."""
    x, t = _grid(x, t)
    on, K = _approx_field(src, rel, x, t)
    u = src.amplitude * np.sin(src.omega * t - K * x) - on
    if u.ndim == 0:
        return float(u)
    return u


def approx_envelope(src: SourceSignal, rel: DispersionRelation, x, t):
    """Envelope of the two (Omega t - K x) terms of :func:`u_approx`.

    Equals A/2 at ``x = v_g t`` and, for gamma != 0, depends on x and t
    only through ``(x - v_g t) / sqrt(|gamma| t)``.
    """
    x, t = _grid(x, t)
    K, v_g, gamma = front_parameters(src, rel)
    pos = t > 0
    ts = np.where(pos, t, 1.0)
    c, s = _fresnel_pair(v_g * ts - x, gamma, ts, np.sign(v_g * ts - x))
    env = src.amplitude / math.sqrt(2.0) * np.hypot(c + 0.5, s + 0.5)
    env = np.where(pos, env, 0.0)
    if env.ndim == 0:
        return float(env)
    return env
